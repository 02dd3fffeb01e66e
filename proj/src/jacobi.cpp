#include "ginertia/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ginertia {

namespace {
constexpr double kOffTarget = 1e-12;
constexpr int kMaxSweeps = 100;
}  // namespace

SpectrumF eigenvalues_float(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("eigenvalues_float: order must be at least 1");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) at(i, j) = 1.0;

    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() >= kOffTarget) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("eigenvalues_float: Jacobi failed to converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    SpectrumF spec;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = at(i, i);
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

Inertia inertia_float(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("inertia_float: tol must be positive");
    if (g.order() == 0) return {};
    Inertia in;
    for (double v : eigenvalues_float(g).values) {
        if (v > tol)
            ++in.p;
        else if (v < -tol)
            ++in.n_neg;
        else
            ++in.eta;
    }
    return in;
}

}  // namespace ginertia
