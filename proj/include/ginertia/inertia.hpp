#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ginertia/graph.hpp"

namespace ginertia {

/// Sign counts of the adjacency spectrum: p positive, n_neg negative, eta
/// zero eigenvalues.  p + n_neg + eta equals the order.
struct Inertia {
    int p = 0;
    int n_neg = 0;
    int eta = 0;

    int order() const { return p + n_neg + eta; }
    bool operator==(const Inertia&) const = default;
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Inertia& in);

/// Exact inertia by symmetric congruence reduction over rationals.  Nonzero
/// diagonal pivots (largest magnitude, then lowest index) record their sign;
/// when the active diagonal is all zero, the lexicographically first nonzero
/// off-diagonal entry contributes a [[0,a],[a,0]] block, exactly one +1 and
/// one -1; a remaining zero matrix contributes its size to eta.
Inertia inertia_exact(const Graph& g);

/// Closed form for K_{n_1,...,n_l}: (1, l-1, n-l) when there is at least one
/// edge (two or more parts), (0, 0, n) for the edgeless single-part case.
Inertia multipartite_inertia(const std::vector<int>& parts);

}  // namespace ginertia
