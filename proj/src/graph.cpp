#include "ginertia/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace ginertia {

Graph::Graph(int order) : order_(order) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be in [0, 64]");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    adj_[u] |= 1ULL << v;
    adj_[v] |= 1ULL << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < order_; ++i) twice += degree(i);
    return twice / 2;
}

std::uint64_t Graph::vertex_mask() const {
    return order_ == 64 ? ~0ULL : (1ULL << order_) - 1;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = i + 1; j < a.order(); ++j)
            if (a.has_edge(i, j)) g.add_edge(i, j);
    const int off = a.order();
    for (int i = 0; i < b.order(); ++i)
        for (int j = i + 1; j < b.order(); ++j)
            if (b.has_edge(i, j)) g.add_edge(off + i, off + j);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    int n = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("complete_multipartite: part must be positive");
        n += p;
    }
    Graph g(n);
    // part id per vertex, blockwise
    int u = 0;
    std::vector<int> part_of(n);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[u++] = static_cast<int>(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

Graph gn(int n) {
    if (n < 2) throw std::invalid_argument("gn: n must be at least 2");
    if (n > Graph::kMaxOrder) throw std::invalid_argument("gn: n exceeds the order cap");
    const int top = (n + 1) / 2, bot = n / 2;
    Graph g(n);
    for (int i = 0; i < top; ++i)
        for (int j = i + 1; j < top; ++j) g.add_edge(i, j);
    for (int i = 0; i < bot; ++i)
        for (int j = i + 1; j < bot; ++j) g.add_edge(top + i, top + j);
    // v_{i+1} ~ w_{j+1} iff (i+1) + (j+1) >= bot + 2
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < bot; ++j)
            if (i + j >= bot) g.add_edge(i, top + j);
    return g;
}

Graph lex_product(const Graph& base, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != base.order())
        throw std::invalid_argument("lex_product: one size per base vertex required");
    int n = 0;
    std::vector<int> start(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] <= 0) throw std::invalid_argument("lex_product: sizes must be positive");
        start[i] = n;
        n += sizes[i];
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("lex_product: result exceeds the order cap");
    Graph g(n);
    for (int b = 0; b < base.order(); ++b)
        for (int i = 0; i < sizes[b]; ++i)
            for (int j = i + 1; j < sizes[b]; ++j) g.add_edge(start[b] + i, start[b] + j);
    for (int a = 0; a < base.order(); ++a)
        for (int b = a + 1; b < base.order(); ++b)
            if (base.has_edge(a, b))
                for (int i = 0; i < sizes[a]; ++i)
                    for (int j = 0; j < sizes[b]; ++j) g.add_edge(start[a] + i, start[b] + j);
    return g;
}

Graph k_joining(int r, const Graph& inner, const std::vector<int>& attach) {
    if (r < 1) throw std::invalid_argument("k_joining: r must be at least 1");
    if (attach.empty()) throw std::invalid_argument("k_joining: attach set must be nonempty");
    for (int v : attach)
        if (v < 0 || v >= inner.order())
            throw std::invalid_argument("k_joining: attach vertex out of range");
    const int off = 1 + r;
    Graph g(off + inner.order());
    for (int i = 1; i <= r; ++i) g.add_edge(0, i);
    for (int i = 0; i < inner.order(); ++i)
        for (int j = i + 1; j < inner.order(); ++j)
            if (inner.has_edge(i, j)) g.add_edge(off + i, off + j);
    for (int v : attach) g.add_edge(0, off + v);
    return g;
}

void BkSpec::validate() const {
    if (k < 2 || k > Graph::kMaxOrder) throw std::invalid_argument("BkSpec: k must be in [2, 64]");
    if (static_cast<int>(parts.size()) != k)
        throw std::invalid_argument("BkSpec: exactly k parts required");
    int n = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("BkSpec: parts must be positive");
        n += p;
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("BkSpec: realized order exceeds 64");
}

std::string BkSpec::to_string() const {
    const int s = k / 2;
    std::string out = "B" + std::to_string(k) + "(";
    for (int i = 0; i < k; ++i) {
        if (i > 0) out += (i == s || i == 2 * s) ? ';' : ',';
        out += std::to_string(parts[i]);
    }
    out += ")";
    return out;
}

BkSpec BkSpec::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("BkSpec: ") + why + " in '" + text + "'");
    };
    std::size_t i = 0;
    if (i >= t.size() || (t[i] != 'B' && t[i] != 'b')) fail("expected leading 'B'");
    ++i;
    auto read_int = [&]() {
        if (i >= t.size() || !isdigit(static_cast<unsigned char>(t[i]))) fail("expected digit");
        long v = 0;
        while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
            v = v * 10 + (t[i] - '0');
            if (v > 1000) fail("number too large");
            ++i;
        }
        return static_cast<int>(v);
    };
    BkSpec spec;
    spec.k = read_int();
    if (i >= t.size() || t[i] != '(') fail("expected '('");
    ++i;
    while (true) {
        spec.parts.push_back(read_int());
        if (i >= t.size()) fail("unterminated part list");
        char c = t[i];
        if (c == ',' || c == ';') {
            ++i;
            continue;
        }
        if (c == ')') {
            ++i;
            break;
        }
        fail("unexpected character");
    }
    if (i != t.size()) fail("trailing characters");
    spec.validate();
    return spec;
}

Graph realize_bk(const BkSpec& spec) {
    spec.validate();
    if (spec.k % 2 == 0) return lex_product(gn(spec.k), spec.parts);
    // vertex order of gn is v_1..v_{s+1}, w_1..w_s; the final part expands
    // v_{s+1}, the v-block vertex adjacent to all of W
    const int s = spec.k / 2;
    std::vector<int> sizes(spec.parts.begin(), spec.parts.begin() + s);
    sizes.push_back(spec.parts[2 * s]);
    sizes.insert(sizes.end(), spec.parts.begin() + s, spec.parts.begin() + 2 * s);
    return lex_product(gn(spec.k), sizes);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> v = s;
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (i > 0 && v[i] == v[i - 1])
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
    }
    Graph h(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (g.has_edge(v[i], v[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> s;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) s.push_back(v);
    return induced_subgraph(g, s);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertex: out of range");
    return induced_subgraph(g, g.vertex_mask() & ~(1ULL << v));
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permuted: permutation size mismatch");
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(perm[i], perm[j])) h.add_edge(i, j);
    return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = 1ULL << v, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (int u = 0; u < g.order(); ++u)
                if ((frontier >> u) & 1u) next |= g.neighbors(u);
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> vs;
        for (int u = 0; u < g.order(); ++u)
            if ((comp >> u) & 1u) vs.push_back(u);
        out.push_back(std::move(vs));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree: empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

}  // namespace ginertia
