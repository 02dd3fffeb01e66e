#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ginertia/graph.hpp"
#include "ginertia/inertia.hpp"

namespace ginertia {

enum class TransformKind { I, II, III };
const char* to_string(TransformKind k);

/// Witness that a congruent transformation was applied and re-verified with
/// exact inertia on both sides.  For an addition, after = (p, n_neg, eta+1)
/// of before; for a deletion the reverse.  Witness vertices:
///   I:   (u, v) with N(u) = N(v), u not adjacent to v
///   II:  (u, v, w), N(u) the disjoint union of N(v) and N(w)
///   III: (u, v, x, y), the congruent quadrangle u-v-x-y-u with congruent
///        opposite edges uv, xy
struct TransformCertificate {
    TransformKind kind = TransformKind::I;
    std::vector<int> witness;
    Inertia before;
    Inertia after;

    std::string to_json() const;
};

/// All non-adjacent open-twin pairs (u < v with N(u) = N(v)), ascending.
std::vector<std::pair<int, int>> find_type1(const Graph& g);

/// All triples (u, v, w): {u,v,w} independent, N(v) and N(w) disjoint,
/// N(u) = N(v) u N(w); v < w, list sorted.
std::vector<std::array<int, 3>> find_type2(const Graph& g);

/// All congruent quadrangles (u, v, x, y): induced 4-cycle u~v~x~y~u with
/// N(u)\{v,y} = N(v)\{u,x} and N(x)\{y,v} = N(y)\{x,u}.  Each cycle/edge-pair
/// combination is reported once, as the lexicographically least of its four
/// equivalent orientations; list sorted.
std::vector<std::array<int, 4>> find_type3(const Graph& g);

bool is_congruent_quadrangle(const Graph& g, int u, int v, int x, int y);

/// Adds a new vertex u (index order()) with N(u) = N(v).
std::pair<Graph, TransformCertificate> add_type1(const Graph& g, int v);

/// Adds a new vertex u with N(u) = N(v) u N(w); requires v != w, v not
/// adjacent to w, and disjoint neighborhoods.
std::pair<Graph, TransformCertificate> add_type2(const Graph& g, int v, int w);

/// Adds a new vertex u with N(u) = (N(v)\{x}) u {y, v}, closing the
/// quadrangle u-v-x-y-u.  Requires v~x, x~y, v not adjacent to y, and
/// N(x)\{y,v} = N(y)\{x}.  The full congruence predicate is re-evaluated
/// with u present; on failure the operation rolls back and reports
/// invalid-argument.
std::pair<Graph, TransformCertificate> add_type3(const Graph& g, int v, int x, int y);

/// Deletes u, which must be certified congruent of the stated kind.
std::pair<Graph, TransformCertificate> delete_congruent(const Graph& g, int u, TransformKind kind);

}  // namespace ginertia
