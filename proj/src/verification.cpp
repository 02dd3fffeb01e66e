#include "ginertia/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "ginertia/classifier.hpp"
#include "ginertia/enumerator.hpp"
#include "ginertia/graph.hpp"
#include "ginertia/inertia.hpp"
#include "ginertia/isomorphism.hpp"
#include "ginertia/jacobi.hpp"
#include "ginertia/canonical.hpp"
#include "ginertia/reference.hpp"
#include "ginertia/transforms.hpp"

namespace ginertia {

namespace {

std::vector<CensusRow> b0_rows(int k) {
    std::vector<CensusRow> out;
    for (const auto& r : census(k, 13))
        if (r.cls == BkClass::B0) out.push_back(r);
    return out;
}

}  // namespace

CheckResult check_table1() {
    std::ostringstream os;
    bool ok = true;
    int total = 0;
    for (int k = 4; k <= 13; ++k) {
        const auto rows = b0_rows(k);
        total += static_cast<int>(rows.size());
        const int want = reference::b0_counts().at(k);
        if (static_cast<int>(rows.size()) != want) {
            ok = false;
            os << " k=" << k << " count " << rows.size() << " != " << want << ";";
        }
        if (!reference::has_b0_list(k)) continue;
        std::vector<std::string> got, want_list;
        for (const auto& r : rows) got.push_back(dedup_key(r.spec).to_string());
        for (const auto& s : reference::b0_list(k)) want_list.push_back(dedup_key(s).to_string());
        std::sort(got.begin(), got.end());
        std::sort(want_list.begin(), want_list.end());
        if (got != want_list) {
            ok = false;
            os << " k=" << k << " member list differs;";
        }
    }
    if (total != 802) {
        ok = false;
        os << " total " << total << " != 802;";
    }
    if (ok) os << "802 members, per-k counts 18/47/138/161/205/124/78/24/6/1, lists match";
    return {ok, os.str()};
}

CheckResult check_appendix_histogram() {
    std::map<int, int> hist;
    int total = 0;
    for (int k = 6; k <= 10; ++k)
        for (const auto& r : b0_rows(k)) {
            ++hist[r.order];
            ++total;
        }
    const bool ok = hist == reference::b0_order_histogram_k6_10() && total == 706;
    std::ostringstream os;
    for (auto [n, c] : hist) os << " order " << n << ": " << c << ";";
    os << " total " << total;
    return {ok, os.str()};
}

CheckResult check_b0_empty_14() {
    const auto rep = verify_empty_at_14(BkClass::B0, 4, 13);
    std::ostringstream os;
    if (rep.empty)
        os << "no composition of 14 lands in B0 for any k in 4..13";
    else
        os << rep.offenders.size() << " offenders, first " << rep.offenders[0].spec.to_string();
    return {rep.empty, os.str()};
}

CheckResult check_bminus_empty_14() {
    const auto rep = verify_empty_at_14(BkClass::Bminus, 10, 13);
    std::ostringstream os;
    if (rep.empty)
        os << "no composition of 14 lands in B- for any k in 10..13";
    else
        os << rep.offenders.size() << " offenders, first " << rep.offenders[0].spec.to_string();
    return {rep.empty, os.str()};
}

namespace {

Graph example_h1() { return add_type1(path_graph(4), 0).first; }
Graph example_h2() { return add_type2(path_graph(4), 0, 3).first; }
Graph example_h3() { return add_type3(path_graph(4), 2, 1, 0).first; }

bool spectrum_close(const Graph& g, const std::vector<double>& want, double tol) {
    const auto spec = eigenvalues_float(g);
    if (spec.values.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (std::abs(spec.values[i] - want[i]) > tol) return false;
    return true;
}

}  // namespace

CheckResult check_spectra_examples() {
    bool ok = true;
    std::ostringstream os;
    const double tol = 1e-3;
    const Graph p4 = path_graph(4), h1 = example_h1(), h2 = example_h2(), h3 = example_h3();
    ok &= spectrum_close(p4, {1.6180, 0.6180, -0.6180, -1.6180}, tol);
    ok &= spectrum_close(h1, {1.8478, 0.7654, 0.0, -0.7654, -1.8478}, tol);
    ok &= spectrum_close(h2, {2.3028, 0.6180, 0.0, -1.3028, -1.6180}, tol);
    ok &= spectrum_close(h3, {2.4812, 0.6889, 0.0, -1.1701, -2.0}, tol);
    if (!ok) os << "a float spectrum strays from the printed values;";
    const bool inertia_ok = inertia_exact(p4) == Inertia{2, 2, 0} &&
                            inertia_exact(h1) == Inertia{2, 2, 1} &&
                            inertia_exact(h2) == Inertia{2, 2, 1} &&
                            inertia_exact(h3) == Inertia{2, 2, 1};
    if (!inertia_ok) os << " exact inertia mismatch;";
    ok &= inertia_ok;
    if (ok) os << "P4 (2,2,0) and the three one-vertex extensions (2,2,1), spectra within 1e-3";
    return {ok, os.str()};
}

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

CheckResult check_transform_trials(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order_dist(3, 12);
    std::uniform_real_distribution<double> p_dist(0.15, 0.85);
    std::ostringstream os;
    for (TransformKind kind : {TransformKind::I, TransformKind::II, TransformKind::III}) {
        int done = 0;
        long long attempts = 0;
        while (done < trials) {
            if (++attempts > 400LL * trials)
                return {false, std::string("could not place enough ") + to_string(kind) +
                                   " witnesses in random graphs"};
            const int n = order_dist(rng);
            const Graph g = random_graph(rng, n, p_dist(rng));
            Graph added;
            TransformCertificate cert;
            try {
                if (kind == TransformKind::I) {
                    std::tie(added, cert) = add_type1(g, static_cast<int>(rng() % n));
                } else if (kind == TransformKind::II) {
                    std::vector<std::pair<int, int>> cands;
                    for (int v = 0; v < n; ++v)
                        for (int w = v + 1; w < n; ++w)
                            if (!g.has_edge(v, w) && !(g.neighbors(v) & g.neighbors(w)))
                                cands.emplace_back(v, w);
                    if (cands.empty()) continue;
                    auto [v, w] = cands[rng() % cands.size()];
                    std::tie(added, cert) = add_type2(g, v, w);
                } else {
                    std::vector<std::array<int, 3>> cands;
                    for (int v = 0; v < n; ++v)
                        for (int x = 0; x < n; ++x)
                            for (int y = 0; y < n; ++y) {
                                if (v == x || v == y || x == y) continue;
                                if (!g.has_edge(v, x) || !g.has_edge(x, y) || g.has_edge(v, y))
                                    continue;
                                const std::uint64_t bx = 1ULL << x, by = 1ULL << y,
                                                    bv = 1ULL << v;
                                if ((g.neighbors(x) & ~(by | bv)) == (g.neighbors(y) & ~bx))
                                    cands.push_back({v, x, y});
                            }
                    if (cands.empty()) continue;
                    const auto& c = cands[rng() % cands.size()];
                    std::tie(added, cert) = add_type3(g, c[0], c[1], c[2]);
                }
            } catch (const std::invalid_argument&) {
                continue;  // witness became invalid; resample
            }
            const Inertia before = inertia_exact(g), after = inertia_exact(added);
            if (cert.before != before || cert.after != after ||
                after != Inertia{before.p, before.n_neg, before.eta + 1})
                return {false, "certificate mismatch: " + cert.to_json()};
            // deleting the appended vertex restores the original labeling
            auto [restored, dcert] = delete_congruent(added, g.order(), kind);
            if (!(restored == g)) return {false, "delete after add did not restore the graph"};
            ++done;
        }
        os << to_string(kind) << ":" << done << " ";
    }
    os << "trials, all certified (p,n) preserved and eta+1, deletions round-trip";
    return {true, os.str()};
}

CheckResult check_theorem_disconnected_sweep(int order) {
    long long disconnected = 0, members = 0, mismatches = 0;
    sweep_all_graphs(order, [&](const Graph& g) {
        if (is_connected(g)) return;
        ++disconnected;
        const Inertia in = inertia_exact(g);
        const bool member = in.p == 2 && in.eta == 1;
        members += member;
        if (check_theorem_disconnected(g).has_value() != member) ++mismatches;
    });
    std::ostringstream os;
    os << "order " << order << ": " << disconnected << " disconnected labeled graphs, " << members
       << " in G, " << mismatches << " mismatches";
    return {mismatches == 0, os.str()};
}

CheckResult check_theorem_main_sweep(int order) {
    long long connected = 0, members = 0, pendant_graphs = 0;
    long long pendant_mismatch = 0, identity_mismatch = 0, uncertified = 0;
    sweep_all_graphs(order, [&](const Graph& g) {
        if (!is_connected(g)) return;
        ++connected;
        const Inertia in = inertia_exact(g);
        const bool has_pendant = !pendant_vertices(g).empty();
        std::optional<PendantForm> mp;
        if (has_pendant) {
            ++pendant_graphs;
            mp = match_pendant_form(g);
            if (mp.has_value() != (in.p == 2)) ++pendant_mismatch;
            if (mp && in.p == 2 && in.eta != mp->d) ++identity_mismatch;
        }
        if (in.p != 2 || in.eta != 1) return;
        ++members;
        bool certified = false;
        if (mp && mp->d == 1) certified = true;
        if (!certified && !has_pendant && match_bstar(g)) certified = true;
        if (!certified)
            for (TransformKind kind : {TransformKind::I, TransformKind::II, TransformKind::III})
                if (in_G123(g, kind)) {
                    certified = true;
                    break;
                }
        if (!certified) ++uncertified;
    });
    std::ostringstream os;
    os << "order " << order << ": " << connected << " connected labeled graphs, " << pendant_graphs
       << " with pendants (" << pendant_mismatch << " equivalence / " << identity_mismatch
       << " nullity-identity mismatches), " << members << " in G, " << uncertified
       << " uncertified";
    return {pendant_mismatch == 0 && identity_mismatch == 0 && uncertified == 0, os.str()};
}

CheckResult check_oracle_exhaustive(int max_order) {
    long long graphs = 0, mismatches = 0;
    for (int n = 1; n <= max_order; ++n)
        sweep_all_graphs(n, [&](const Graph& g) {
            ++graphs;
            if (inertia_exact(g) != inertia_float(g, 1e-6)) ++mismatches;
        });
    std::ostringstream os;
    os << graphs << " labeled graphs of order <= " << max_order << ", " << mismatches
       << " exact/float disagreements";
    return {mismatches == 0, os.str()};
}

CheckResult check_oracle_bstar() {
    long long members = 0, mismatches = 0;
    for (int k = 4; k <= 13; ++k)
        for (const auto& r : b0_rows(k)) {
            ++members;
            const Graph g = realize_bk(r.spec);
            if (inertia_exact(g) != inertia_float(g, 1e-6)) ++mismatches;
        }
    std::ostringstream os;
    os << members << " census members, " << mismatches << " exact/float disagreements";
    return {members == 802 && mismatches == 0, os.str()};
}

CheckResult check_bstar_structure() {
    long long members = 0, bad = 0;
    std::string first;
    for (int k = 4; k <= 13; ++k)
        for (const auto& r : b0_rows(k)) {
            ++members;
            const Graph g = realize_bk(r.spec);
            const auto cd = canonical_decomposition(g);
            bool ok = cd.canonical == gn(k) && k >= 4 && k <= 13;
            const Graph& q = cd.canonical;
            if (ok) {
                // v* = lowest-index minimum-degree vertex must be v_1 with
                // degree ceil(k/2) - 1
                int vstar = 0;
                for (int v = 1; v < k; ++v)
                    if (q.degree(v) < q.degree(vstar)) vstar = v;
                const int tc = (k + 1) / 2 - 1;
                ok = vstar == 0 && q.degree(0) == tc;
                std::vector<int> X, Y;
                for (int v = 1; v < k && ok; ++v) (q.has_edge(0, v) ? X : Y).push_back(v);
                if (ok) {
                    std::uint64_t xmask = 0, ymask = 0;
                    for (int x : X) xmask |= 1ULL << x;
                    for (int y : Y) ymask |= 1ULL << y;
                    auto counts = [&](const std::vector<int>& vs, std::uint64_t side) {
                        std::vector<int> c;
                        for (int v : vs) c.push_back(std::popcount(q.neighbors(v) & side));
                        std::sort(c.begin(), c.end());
                        return c;
                    };
                    // strict chains with the stated end bounds
                    const auto cx = counts(X, ymask), cy = counts(Y, xmask);
                    ok = static_cast<int>(X.size()) == tc;
                    for (std::size_t i = 0; ok && i < cx.size(); ++i) {
                        if (cx[i] <= 0 || cx[i] > static_cast<int>(Y.size())) ok = false;
                        if (i + 1 < cx.size() && cx[i] >= cx[i + 1]) ok = false;
                    }
                    for (std::size_t i = 0; ok && i < cy.size(); ++i) {
                        if (cy[i] < 0 || cy[i] > tc) ok = false;
                        if (i + 1 < cy.size() && cy[i] >= cy[i + 1]) ok = false;
                    }
                }
                if (ok && match_bstar(g) != dedup_key(r.spec)) ok = false;
            }
            if (!ok) {
                ++bad;
                if (first.empty()) first = r.spec.to_string();
            }
        }
    std::ostringstream os;
    os << members << " census members decompose onto gn(k) with strict chains";
    if (bad) os << "; " << bad << " failures, first " << first;
    return {members == 802 && bad == 0, os.str()};
}

CheckResult check_gn_chain() {
    for (int n = 2; n <= 13; ++n)
        if (!contains_induced(gn(n + 1), gn(n)))
            return {false, "gn(" + std::to_string(n) + ") not found inside gn(" +
                               std::to_string(n + 1) + ")"};
    return {true, "gn(n) induced in gn(n+1) for n = 2..13"};
}

CheckResult check_bminus_patterns_n13() {
    long long rows13 = 0, bminus = 0, mismatches = 0;
    std::string first;
    for (int k = 4; k <= 9; ++k)
        for (const auto& r : census(k, 13)) {
            if (r.order != 13) continue;
            ++rows13;
            const bool is_minus = r.cls == BkClass::Bminus;
            bminus += is_minus;
            if (is_minus != pattern_match_bminus(r.spec).has_value()) {
                ++mismatches;
                if (first.empty()) first = r.spec.to_string();
            }
        }
    std::ostringstream os;
    os << rows13 << " order-13 rows for k in 4..9, " << bminus << " in B-, " << mismatches
       << " family-match mismatches";
    if (!first.empty()) os << ", first " << first;
    return {mismatches == 0, os.str()};
}

}  // namespace ginertia
