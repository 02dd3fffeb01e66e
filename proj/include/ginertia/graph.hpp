#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ginertia {

/// Simple undirected graph on at most 64 vertices, stored as one 64-bit
/// adjacency row per vertex.  Rows are kept symmetric with a zero diagonal,
/// and every bit at index >= order() is clear.  Values are cheap to copy and
/// all operations on them are pure, so graphs can be shared freely between
/// threads.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);

    std::uint64_t neighbors(int v) const { return adj_[v]; }
    std::uint64_t closed_neighborhood(int v) const { return adj_[v] | (1ULL << v); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int edge_count() const;
    /// Mask with one bit per vertex.
    std::uint64_t vertex_mask() const;

    bool operator==(const Graph&) const = default;

private:
    int order_ = 0;
    std::array<std::uint64_t, kMaxOrder> adj_{};
};

// -- basic builders ---------------------------------------------------------

Graph complete(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Complete multipartite graph K_{n_1,...,n_l}: vertices grouped blockwise,
/// adjacent iff in different parts.  All parts must be positive.
Graph complete_multipartite(const std::vector<int>& parts);

/// The two-clique graph G_n: cliques on v_1..v_ceil(n/2) and w_1..w_floor(n/2)
/// with the nested cross neighborhoods
///   {} = N_W(v_1) < N_W(v_2) < ... < N_W(v_ceil(n/2)),
/// i.e. v_i ~ w_j iff i + j >= floor(n/2) + 2 (1-based).  Vertex order is the
/// v-block then the w-block.  G_2 = 2K_1, G_3 = P_3, G_4 = P_4.
Graph gn(int n);

/// Generalized lexicographic product: vertex j of `base` becomes a clique of
/// sizes[j] vertices, with a full join between cliques i and j iff i ~ j in
/// base.  Vertex numbering is blockwise in base order.
Graph lex_product(const Graph& base, const std::vector<int>& sizes);

/// K_{1,r}(u) joined to `inner`: star center u (vertex 0) with r pendant
/// leaves (vertices 1..r), u additionally joined to each vertex of `attach`
/// (indices into inner, which occupies vertices r+1..r+|inner|).
Graph k_joining(int r, const Graph& inner, const std::vector<int>& attach);

// -- B_k specifications -----------------------------------------------------

/// A composition (k; n_1,...,n_k) denoting B_k(n_1,...,n_k), the expansion of
/// G_k by cliques of the given sizes.  The printed form keeps the paper's
/// half-block punctuation, e.g. "B5(2,2;2,2;1)".
struct BkSpec {
    int k = 0;
    std::vector<int> parts;

    void validate() const;  // throws std::invalid_argument
    std::string to_string() const;
    static BkSpec parse(const std::string& text);

    bool operator==(const BkSpec&) const = default;
};

/// lex_product(gn(spec.k), spec.parts): parts n_1..n_s expand the v-block,
/// n_{s+1}..n_{2s} the w-block; for odd k the last part expands v_{s+1}, the
/// v-block vertex adjacent to all of W.
Graph realize_bk(const BkSpec& spec);

// -- subgraphs and queries --------------------------------------------------

/// Induced subgraph on `s`; vertices renumbered in ascending original order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph induced_subgraph(const Graph& g, std::uint64_t mask);
Graph delete_vertex(const Graph& g, int v);
/// Relabel: vertex i of the result is vertex perm[i] of g.
Graph permuted(const Graph& g, const std::vector<int>& perm);

/// Connected components, each sorted, in ascending order of minimal vertex.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
int min_degree(const Graph& g);  // order >= 1
std::vector<int> pendant_vertices(const Graph& g);

}  // namespace ginertia
