#include "ginertia/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ginertia {

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// Multiset of neighbor degrees, sorted, one per vertex.
std::vector<std::vector<int>> neighbor_degree_multisets(const Graph& g) {
    std::vector<std::vector<int>> out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        for (int u = 0; u < g.order(); ++u)
            if (g.has_edge(v, u)) out[v].push_back(g.degree(u));
        std::sort(out[v].begin(), out[v].end());
    }
    return out;
}

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, std::uint64_t used, int v) {
    const int n = a.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(v, u) != b.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        if (extend_iso(a, b, map, used | (1ULL << w), v + 1)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > 10 || b.order() > 10)
        throw std::domain_error("isomorphic: supported up to order 10");
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    auto na = neighbor_degree_multisets(a), nb = neighbor_degree_multisets(b);
    auto sa = na, sb = nb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(a.order(), -1);
    return extend_iso(a, b, map, 0, 0);
}

namespace {

bool extend_embed(const Graph& host, const Graph& pat, const std::vector<int>& order,
                  std::vector<int>& map, std::uint64_t used, std::size_t idx) {
    if (idx == order.size()) return true;
    const int p = order[idx];
    for (int h = 0; h < host.order(); ++h) {
        if ((used >> h) & 1u) continue;
        if (host.degree(h) < pat.degree(p)) continue;
        bool ok = true;
        for (std::size_t k = 0; k < idx && ok; ++k) {
            const int q = order[k];
            if (pat.has_edge(p, q) != host.has_edge(h, map[q])) ok = false;
        }
        if (!ok) continue;
        map[p] = h;
        if (extend_embed(host, pat, order, map, used | (1ULL << h), idx + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > 16)
        throw std::domain_error("contains_induced: pattern orders above 16 unsupported");
    if (pattern.order() > host.order()) return std::nullopt;
    // map pattern vertices in descending degree order: constrained first
    std::vector<int> order(pattern.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return pattern.degree(x) > pattern.degree(y); });
    std::vector<int> map(pattern.order(), -1);
    if (!extend_embed(host, pattern, order, map, 0, 0)) return std::nullopt;
    std::vector<int> subset(map.begin(), map.end());
    std::sort(subset.begin(), subset.end());
    return subset;
}

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) mask |= 1ULL << pair_index(i, j);
    return mask;
}

Graph graph_from_edge_mask(int order, std::uint64_t mask) {
    Graph g(order);
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1u) g.add_edge(i, j);
    return g;
}

std::uint64_t canonical_edge_mask(const Graph& g) {
    if (g.order() > 8) throw std::domain_error("canonical_edge_mask: supported up to order 8");
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        best = std::min(best, edge_mask(permuted(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace ginertia
