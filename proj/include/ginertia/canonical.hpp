#pragma once

#include <vector>

#include "ginertia/graph.hpp"

namespace ginertia {

/// Quotient by the relation u ~ v iff u,v adjacent with N[u] = N[v]
/// (adjacent closed twins).  Each class induces a clique; classes join
/// blockwise.  `representatives[i]` is the least original vertex of class i,
/// ascending, and lex_product(canonical, class_sizes) rebuilds the original
/// graph up to the blockwise relabeling given by the classes.
struct CanonicalDecomposition {
    Graph canonical;
    std::vector<int> class_sizes;
    std::vector<int> representatives;
};

CanonicalDecomposition canonical_decomposition(const Graph& g);

}  // namespace ginertia
