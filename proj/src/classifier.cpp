#include "ginertia/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ginertia/canonical.hpp"
#include "ginertia/enumerator.hpp"
#include "json.hpp"

namespace ginertia {

const char* to_string(ClassLabel l) {
    switch (l) {
        case ClassLabel::H: return "H";
        case ClassLabel::G: return "G";
        case ClassLabel::G_minus: return "G_minus";
        case ClassLabel::G_plus: return "G_plus";
        case ClassLabel::G_star: return "G_star";
        case ClassLabel::G1: return "G1";
        case ClassLabel::G2: return "G2";
        case ClassLabel::G3: return "G3";
        case ClassLabel::X_complete: return "X_complete";
        case ClassLabel::reduced: return "reduced";
        case ClassLabel::non_reduced: return "non_reduced";
        case ClassLabel::B_star: return "B_star";
    }
    return "?";
}

const char* to_string(DisconnectedBranch b) {
    switch (b) {
        case DisconnectedBranch::two_cliques_plus_k1: return "K_s+K_t+K_1";
        case DisconnectedBranch::h_plus_k1: return "H+K_1";
        case DisconnectedBranch::clique_plus_near_clique: return "K_s+K_m\\e";
    }
    return "?";
}

const char* to_string(GYShape s) {
    switch (s) {
        case GYShape::clique: return "clique";
        case GYShape::clique_minus_edge: return "clique_minus_edge";
        case GYShape::clique_plus_k1: return "clique_plus_k1";
        case GYShape::other: return "other";
    }
    return "?";
}

bool in_H(const Graph& g) {
    const Inertia in = inertia_exact(g);
    return in.p == 2 && in.eta == 0;
}

bool in_G(const Graph& g) {
    const Inertia in = inertia_exact(g);
    return in.p == 2 && in.eta == 1;
}

GSplit split_G(const Graph& g) {
    if (!in_G(g)) throw std::invalid_argument("split_G: graph is not in G");
    if (!is_connected(g)) return GSplit::G_minus;
    return pendant_vertices(g).empty() ? GSplit::G_star : GSplit::G_plus;
}

namespace {

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// complete graph with exactly one edge removed, order >= 3
bool is_clique_minus_edge(const Graph& g, const std::vector<int>& vs) {
    if (vs.size() < 3) return false;
    int missing = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) ++missing;
    return missing == 1;
}

}  // namespace

std::optional<DisconnectedBranch> check_theorem_disconnected(const Graph& g) {
    if (g.order() < 5) throw std::invalid_argument("check_theorem_disconnected: order >= 5 required");
    auto comps = components(g);
    if (comps.size() < 2)
        throw std::invalid_argument("check_theorem_disconnected: graph must be disconnected");
    if (comps.size() == 3) {
        std::vector<const std::vector<int>*> big;
        int singles = 0;
        for (const auto& c : comps) {
            if (c.size() == 1)
                ++singles;
            else
                big.push_back(&c);
        }
        if (singles == 1 && is_clique(g, *big[0]) && is_clique(g, *big[1]))
            return DisconnectedBranch::two_cliques_plus_k1;
        return std::nullopt;
    }
    if (comps.size() != 2) return std::nullopt;
    const auto &a = comps[0], &b = comps[1];
    if (a.size() == 1 || b.size() == 1) {
        const auto& rest = a.size() == 1 ? b : a;
        if (in_H(induced_subgraph(g, rest))) return DisconnectedBranch::h_plus_k1;
        return std::nullopt;
    }
    if ((is_clique(g, a) && is_clique_minus_edge(g, b)) ||
        (is_clique(g, b) && is_clique_minus_edge(g, a)))
        return DisconnectedBranch::clique_plus_near_clique;
    return std::nullopt;
}

namespace {

// Part sizes when m is complete multipartite, else nullopt.  Vertices of one
// part are exactly those sharing a neighborhood.
std::optional<std::vector<int>> multipartite_parts(const Graph& m) {
    const int n = m.order();
    const std::uint64_t full = m.vertex_mask();
    std::vector<int> sizes;
    std::vector<char> done(n, 0);
    for (int v = 0; v < n; ++v) {
        if (done[v]) continue;
        const std::uint64_t nv = m.neighbors(v);
        std::uint64_t group = 0;
        for (int u = 0; u < n; ++u)
            if (!done[u] && m.neighbors(u) == nv) group |= 1ULL << u;
        if (nv != (full & ~group)) return std::nullopt;
        int size = 0;
        for (int u = 0; u < n; ++u)
            if ((group >> u) & 1u) {
                done[u] = 1;
                ++size;
            }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

}  // namespace

std::optional<PendantForm> match_pendant_form(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const auto pendants = pendant_vertices(g);
    if (pendants.empty()) return std::nullopt;

    std::vector<int> centers;
    for (int p : pendants) {
        const int u = std::countr_zero(g.neighbors(p));
        if (std::find(centers.begin(), centers.end(), u) == centers.end()) centers.push_back(u);
    }
    std::sort(centers.begin(), centers.end());

    for (int u : centers) {
        PendantForm form;
        form.center = u;
        for (int p : pendants)
            if (g.neighbors(p) == (1ULL << u)) form.leaves.push_back(p);
        form.r = static_cast<int>(form.leaves.size());
        if (form.r == 0) continue;
        std::vector<int> rest;
        for (int v = 0; v < g.order(); ++v)
            if (v != u && std::find(form.leaves.begin(), form.leaves.end(), v) == form.leaves.end())
                rest.push_back(v);
        if (rest.empty()) continue;
        for (int v : rest)
            if (g.has_edge(u, v)) form.attach.push_back(v);
        if (form.attach.empty()) continue;
        auto parts = multipartite_parts(induced_subgraph(g, rest));
        if (!parts || parts->size() < 2) continue;  // an edgeless part has p = 0, not 1
        form.parts = *parts;
        const int sum = std::accumulate(form.parts.begin(), form.parts.end(), 0);
        const int l = static_cast<int>(form.parts.size());
        form.d = form.r + sum - (l + 1);
        const bool all_ones =
            std::all_of(form.parts.begin(), form.parts.end(), [](int p) { return p == 1; });
        if (form.r == 2 && all_ones)
            form.shape = PendantForm::Shape::star2_complete;
        else if (form.r == 1 && form.parts.front() == 2 &&
                 std::count(form.parts.begin(), form.parts.end(), 1) == l - 1)
            form.shape = PendantForm::Shape::star1_near_clique;
        return form;
    }
    return std::nullopt;
}

std::optional<G123Certificate> in_G123(const Graph& g, TransformKind kind) {
    if (!is_connected(g)) return std::nullopt;
    auto try_delete = [&](int u, std::vector<int> witness) -> std::optional<G123Certificate> {
        if (!in_H(delete_vertex(g, u))) return std::nullopt;
        return G123Certificate{kind, u, std::move(witness)};
    };
    switch (kind) {
        case TransformKind::I:
            for (auto [a, b] : find_type1(g)) {
                if (auto c = try_delete(a, {a, b})) return c;
                if (auto c = try_delete(b, {b, a})) return c;
            }
            break;
        case TransformKind::II:
            for (const auto& t : find_type2(g))
                if (auto c = try_delete(t[0], {t[0], t[1], t[2]})) return c;
            break;
        case TransformKind::III:
            for (const auto& q : find_type3(g))
                for (int i = 0; i < 4; ++i)
                    if (auto c = try_delete(q[i], {q[0], q[1], q[2], q[3]})) return c;
            break;
    }
    return std::nullopt;
}

XYAnalysis xy_analysis(const Graph& g, int vstar) {
    if (vstar < 0 || vstar >= g.order()) throw std::invalid_argument("xy_analysis: out of range");
    if (g.degree(vstar) != min_degree(g))
        throw std::invalid_argument("xy_analysis: vstar must attain the minimum degree");
    XYAnalysis out;
    out.vstar = vstar;
    for (int v = 0; v < g.order(); ++v) {
        if (v == vstar) continue;
        (g.has_edge(vstar, v) ? out.X : out.Y).push_back(v);
    }
    const Graph gy = induced_subgraph(g, out.Y);
    int missing = 0;
    for (int i = 0; i < gy.order(); ++i)
        for (int j = i + 1; j < gy.order(); ++j)
            if (!gy.has_edge(i, j)) ++missing;
    if (missing == 0) {
        out.gy_shape = GYShape::clique;
    } else if (missing == 1) {
        out.gy_shape = GYShape::clique_minus_edge;
    } else {
        int isolated = 0;
        for (int i = 0; i < gy.order(); ++i)
            if (gy.degree(i) == 0) ++isolated;
        // all gaps meet the single isolated vertex, the rest is a clique
        out.gy_shape = (isolated == 1 && missing == gy.order() - 1) ? GYShape::clique_plus_k1
                                                                    : GYShape::other;
    }
    out.x_complete = is_clique(g, out.X);
    if (out.x_complete) {
        std::uint64_t ymask = 0;
        for (int y : out.Y) ymask |= 1ULL << y;
        bool chain = true;
        for (std::size_t i = 0; i < out.X.size() && chain; ++i)
            for (std::size_t j = i + 1; j < out.X.size() && chain; ++j) {
                const std::uint64_t a = g.neighbors(out.X[i]) & ymask;
                const std::uint64_t b = g.neighbors(out.X[j]) & ymask;
                if ((a & ~b) && (b & ~a)) chain = false;
            }
        out.reduced = chain;
    }
    return out;
}

std::optional<BkSpec> match_bstar(const Graph& g) {
    if (!is_connected(g) || !pendant_vertices(g).empty()) return std::nullopt;
    {
        const Inertia in = inertia_exact(g);
        if (in.p != 2 || in.eta != 1) return std::nullopt;
    }
    const CanonicalDecomposition cd = canonical_decomposition(g);
    const Graph& q = cd.canonical;
    const int k = q.order();
    if (k < 4 || k > 13) return std::nullopt;

    int vstar = 0;
    for (int v = 1; v < k; ++v)
        if (q.degree(v) < q.degree(vstar)) vstar = v;
    std::vector<int> X, Y;
    for (int v = 0; v < k; ++v) {
        if (v == vstar) continue;
        (q.has_edge(vstar, v) ? X : Y).push_back(v);
    }
    std::uint64_t xmask = 0, ymask = 0;
    for (int x : X) xmask |= 1ULL << x;
    for (int y : Y) ymask |= 1ULL << y;
    // The cross-neighborhood chains of G_k are strict, so ties disqualify.
    auto sort_strict = [&](std::vector<int>& vs, std::uint64_t side) {
        std::sort(vs.begin(), vs.end(), [&](int a, int b) {
            return std::popcount(q.neighbors(a) & side) < std::popcount(q.neighbors(b) & side);
        });
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if (std::popcount(q.neighbors(vs[i]) & side) ==
                std::popcount(q.neighbors(vs[i + 1]) & side))
                return false;
        return true;
    };
    if (!sort_strict(X, ymask) || !sort_strict(Y, xmask)) return std::nullopt;

    std::vector<int> perm;
    perm.push_back(vstar);
    perm.insert(perm.end(), X.begin(), X.end());
    perm.insert(perm.end(), Y.begin(), Y.end());
    if (permuted(q, perm) != gn(k)) return std::nullopt;

    // perm lists sizes in gn vertex order v_1..v_ceil, w_1..w_floor; for odd
    // k the composition order puts the v_{s+1} size last
    std::vector<int> sizes;
    for (int v : perm) sizes.push_back(cd.class_sizes[v]);
    BkSpec spec;
    spec.k = k;
    if (k % 2 == 0) {
        spec.parts = sizes;
    } else {
        const int s = k / 2;
        spec.parts.assign(sizes.begin(), sizes.begin() + s);
        spec.parts.insert(spec.parts.end(), sizes.begin() + s + 1, sizes.end());
        spec.parts.push_back(sizes[s]);
    }
    return dedup_key(spec);
}

ClassReport classify_full(const Graph& g) {
    ClassReport rep;
    rep.inertia = inertia_exact(g);
    const int n = g.order();
    const bool connected = is_connected(g);
    const bool pendant = !pendant_vertices(g).empty();

    if (rep.inertia.p == 2 && rep.inertia.eta == 0) rep.labels.insert(ClassLabel::H);
    const bool member_g = rep.inertia.p == 2 && rep.inertia.eta == 1;
    if (member_g) {
        rep.labels.insert(ClassLabel::G);
        if (!connected)
            rep.labels.insert(ClassLabel::G_minus);
        else
            rep.labels.insert(pendant ? ClassLabel::G_plus : ClassLabel::G_star);
    }

    if (!connected && n >= 5) rep.disconnected_branch = check_theorem_disconnected(g);

    if (connected && pendant) rep.pendant_form = match_pendant_form(g);

    if (member_g && connected) {
        rep.g1 = in_G123(g, TransformKind::I);
        rep.g2 = in_G123(g, TransformKind::II);
        rep.g3 = in_G123(g, TransformKind::III);
        if (rep.g1) rep.labels.insert(ClassLabel::G1);
        if (rep.g2) rep.labels.insert(ClassLabel::G2);
        if (rep.g3) rep.labels.insert(ClassLabel::G3);
    }

    if (member_g && connected && !pendant) {
        int vstar = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(vstar)) vstar = v;
        rep.vstar = vstar;
        rep.xy = xy_analysis(g, vstar);
        if (rep.xy->x_complete) {
            rep.labels.insert(ClassLabel::X_complete);
            rep.labels.insert(*rep.xy->reduced ? ClassLabel::reduced : ClassLabel::non_reduced);
        }
        if (auto spec = match_bstar(g)) {
            rep.labels.insert(ClassLabel::B_star);
            rep.b_star_spec = spec;
            rep.b_star_class_sizes = canonical_decomposition(g).class_sizes;
        }
    }
    return rep;
}

std::string ClassReport::to_json() const {
    nlohmann::json j;
    j["labels"] = nlohmann::json::array();
    for (ClassLabel l : labels) j["labels"].push_back(to_string(l));
    j["inertia"] = {{"p", inertia.p}, {"n_neg", inertia.n_neg}, {"eta", inertia.eta}};
    if (vstar) j["vstar"] = *vstar;
    if (disconnected_branch) j["disconnected_branch"] = to_string(*disconnected_branch);
    if (pendant_form) {
        const auto& f = *pendant_form;
        const char* shape = f.shape == PendantForm::Shape::star2_complete ? "K_{1,2}+complete"
                            : f.shape == PendantForm::Shape::star1_near_clique
                                ? "K_{1,1}+clique_minus_edge"
                                : "general";
        j["pendant_form"] = {{"center", f.center}, {"r", f.r},  {"parts", f.parts},
                             {"attach", f.attach}, {"d", f.d},  {"leaves", f.leaves},
                             {"shape", shape}};
    }
    auto cert_json = [](const G123Certificate& c) {
        return nlohmann::json{
            {"kind", to_string(c.kind)}, {"removed", c.removed}, {"witness", c.witness}};
    };
    if (g1) j["g1"] = cert_json(*g1);
    if (g2) j["g2"] = cert_json(*g2);
    if (g3) j["g3"] = cert_json(*g3);
    if (xy) {
        j["xy"] = {{"vstar", xy->vstar},
                   {"X", xy->X},
                   {"Y", xy->Y},
                   {"gy_shape", to_string(xy->gy_shape)},
                   {"x_complete", xy->x_complete}};
        if (xy->reduced) j["xy"]["reduced"] = *xy->reduced;
    }
    if (b_star_spec) {
        j["b_star"] = {{"spec", b_star_spec->to_string()}, {"class_sizes", b_star_class_sizes}};
    }
    return j.dump();
}

}  // namespace ginertia
