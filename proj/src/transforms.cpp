#include "ginertia/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace ginertia {

const char* to_string(TransformKind k) {
    switch (k) {
        case TransformKind::I: return "I";
        case TransformKind::II: return "II";
        case TransformKind::III: return "III";
    }
    return "?";
}

std::string TransformCertificate::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["witness"] = witness;
    j["before"] = {{"p", before.p}, {"n_neg", before.n_neg}, {"eta", before.eta}};
    j["after"] = {{"p", after.p}, {"n_neg", after.n_neg}, {"eta", after.eta}};
    return j.dump();
}

std::vector<std::pair<int, int>> find_type1(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::array<int, 3>> find_type2(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.order(); ++u) {
        const std::uint64_t nu = g.neighbors(u);
        for (int v = 0; v < g.order(); ++v) {
            if (v == u || g.has_edge(u, v)) continue;
            const std::uint64_t nv = g.neighbors(v);
            if (nv & ~nu) continue;
            for (int w = v + 1; w < g.order(); ++w) {
                if (w == u || g.has_edge(u, w) || g.has_edge(v, w)) continue;
                const std::uint64_t nw = g.neighbors(w);
                if ((nv & nw) == 0 && (nv | nw) == nu) out.push_back({u, v, w});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_congruent_quadrangle(const Graph& g, int u, int v, int x, int y) {
    const int n = g.order();
    if (u < 0 || v < 0 || x < 0 || y < 0 || u >= n || v >= n || x >= n || y >= n) return false;
    if (u == v || u == x || u == y || v == x || v == y || x == y) return false;
    if (!(g.has_edge(u, v) && g.has_edge(v, x) && g.has_edge(x, y) && g.has_edge(y, u)))
        return false;
    if (g.has_edge(u, x) || g.has_edge(v, y)) return false;
    const auto bit = [](int i) { return 1ULL << i; };
    if ((g.neighbors(u) & ~(bit(v) | bit(y))) != (g.neighbors(v) & ~(bit(u) | bit(x))))
        return false;
    return (g.neighbors(x) & ~(bit(y) | bit(v))) == (g.neighbors(y) & ~(bit(x) | bit(u)));
}

std::vector<std::array<int, 4>> find_type3(const Graph& g) {
    std::set<std::array<int, 4>> seen;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (!is_congruent_quadrangle(g, u, v, x, y)) continue;
                    // same cycle + same congruent-edge pairing, four ways
                    std::array<int, 4> reps[4] = {
                        {u, v, x, y}, {v, u, y, x}, {x, y, u, v}, {y, x, v, u}};
                    seen.insert(*std::min_element(reps, reps + 4));
                }
    return {seen.begin(), seen.end()};
}

namespace {

std::pair<Graph, TransformCertificate> certify_add(const Graph& g, Graph added, TransformKind kind,
                                                   std::vector<int> witness) {
    TransformCertificate cert{kind, std::move(witness), inertia_exact(g), inertia_exact(added)};
    if (cert.after != Inertia{cert.before.p, cert.before.n_neg, cert.before.eta + 1})
        throw std::logic_error("congruent addition failed certification: " + cert.to_json());
    return {std::move(added), std::move(cert)};
}

Graph append_vertex(const Graph& g, std::uint64_t nbrs) {
    Graph h(g.order() + 1);
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j)) h.add_edge(i, j);
    for (int i = 0; i < g.order(); ++i)
        if ((nbrs >> i) & 1u) h.add_edge(g.order(), i);
    return h;
}

void check_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

}  // namespace

std::pair<Graph, TransformCertificate> add_type1(const Graph& g, int v) {
    check_vertex(g, v, "add_type1");
    if (g.order() >= Graph::kMaxOrder) throw std::invalid_argument("add_type1: graph is full");
    return certify_add(g, append_vertex(g, g.neighbors(v)), TransformKind::I, {g.order(), v});
}

std::pair<Graph, TransformCertificate> add_type2(const Graph& g, int v, int w) {
    check_vertex(g, v, "add_type2");
    check_vertex(g, w, "add_type2");
    if (v == w) throw std::invalid_argument("add_type2: v and w must differ");
    if (g.has_edge(v, w)) throw std::invalid_argument("add_type2: v and w must be non-adjacent");
    if (g.neighbors(v) & g.neighbors(w))
        throw std::invalid_argument("add_type2: N(v) and N(w) must be disjoint");
    if (g.order() >= Graph::kMaxOrder) throw std::invalid_argument("add_type2: graph is full");
    return certify_add(g, append_vertex(g, g.neighbors(v) | g.neighbors(w)), TransformKind::II,
                       {g.order(), v, w});
}

std::pair<Graph, TransformCertificate> add_type3(const Graph& g, int v, int x, int y) {
    check_vertex(g, v, "add_type3");
    check_vertex(g, x, "add_type3");
    check_vertex(g, y, "add_type3");
    if (v == x || v == y || x == y) throw std::invalid_argument("add_type3: vertices must differ");
    if (!g.has_edge(v, x) || !g.has_edge(x, y) || g.has_edge(v, y))
        throw std::invalid_argument("add_type3: need v~x, x~y, v not adjacent to y");
    const auto bit = [](int i) { return 1ULL << i; };
    if ((g.neighbors(x) & ~(bit(y) | bit(v))) != (g.neighbors(y) & ~bit(x)))
        throw std::invalid_argument("add_type3: N(x)\\{y,v} must equal N(y)\\{x}");
    if (g.order() >= Graph::kMaxOrder) throw std::invalid_argument("add_type3: graph is full");
    const int u = g.order();
    Graph added = append_vertex(g, (g.neighbors(v) & ~bit(x)) | bit(y) | bit(v));
    if (!is_congruent_quadrangle(added, u, v, x, y))
        throw std::invalid_argument("add_type3: quadrangle not congruent after insertion");
    return certify_add(g, std::move(added), TransformKind::III, {u, v, x, y});
}

std::pair<Graph, TransformCertificate> delete_congruent(const Graph& g, int u,
                                                        TransformKind kind) {
    check_vertex(g, u, "delete_congruent");
    std::vector<int> witness;
    switch (kind) {
        case TransformKind::I:
            for (auto [a, b] : find_type1(g))
                if (a == u || b == u) {
                    witness = {u, a == u ? b : a};
                    break;
                }
            break;
        case TransformKind::II:
            for (const auto& t : find_type2(g))
                if (t[0] == u) {
                    witness = {t[0], t[1], t[2]};
                    break;
                }
            break;
        case TransformKind::III:
            for (const auto& q : find_type3(g))
                for (int i = 0; i < 4; ++i)
                    if (q[i] == u && witness.empty()) witness = {q[0], q[1], q[2], q[3]};
            break;
    }
    if (witness.empty())
        throw std::invalid_argument("delete_congruent: vertex is not congruent of that kind");
    TransformCertificate cert{kind, witness, inertia_exact(g), {}};
    Graph h = delete_vertex(g, u);
    cert.after = inertia_exact(h);
    if (cert.before != Inertia{cert.after.p, cert.after.n_neg, cert.after.eta + 1})
        throw std::logic_error("congruent deletion failed certification: " + cert.to_json());
    return {std::move(h), std::move(cert)};
}

}  // namespace ginertia
