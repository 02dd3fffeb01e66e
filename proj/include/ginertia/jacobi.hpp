#pragma once

#include <vector>

#include "ginertia/graph.hpp"
#include "ginertia/inertia.hpp"

namespace ginertia {

/// Adjacency eigenvalues, sorted descending, with the tolerance used for sign
/// classification.
struct SpectrumF {
    std::vector<double> values;
    double tol = 1e-6;
};

/// All eigenvalues of A(g) by cyclic Jacobi rotations; iterates until the
/// off-diagonal Frobenius norm drops below 1e-12.  Independent of the exact
/// route on purpose: this is the cross-check oracle.
SpectrumF eigenvalues_float(const Graph& g);

/// Sign counts from eigenvalues_float: lambda > tol positive, < -tol
/// negative, else zero.
Inertia inertia_float(const Graph& g, double tol = 1e-6);

}  // namespace ginertia
