#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginertia/graph.hpp"

namespace ginertia {

/// Exact isomorphism test by degree-pruned permutation search.  Supported up
/// to order 10; beyond that it throws std::domain_error (exhaustive sweeps
/// dedup by canonical edge code instead).
bool isomorphic(const Graph& a, const Graph& b);

/// Finds a vertex subset S of `host` whose induced subgraph is isomorphic to
/// `pattern`; returns S (ascending) or nullopt.  Backtracking with
/// degree-sequence pruning; pattern order is capped at 16.
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern);

/// Smallest upper-triangle edge mask over all relabelings (colex pair order).
/// Brute force over permutations; order <= 8.
std::uint64_t canonical_edge_mask(const Graph& g);

/// Bit index of pair {i,j} (i<j) in colex order (0,1),(0,2),(1,2),(0,3),...
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

/// Graph on `order` vertices whose edges are the set bits of `mask` in colex
/// pair order; inverse of the packing used by canonical_edge_mask.
Graph graph_from_edge_mask(int order, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

}  // namespace ginertia
