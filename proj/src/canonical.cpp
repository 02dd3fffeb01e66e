#include "ginertia/canonical.hpp"

namespace ginertia {

CanonicalDecomposition canonical_decomposition(const Graph& g) {
    const int n = g.order();
    // u rho v iff u~v and N(u)\v = N(v)\u, i.e. equal closed neighborhoods
    std::vector<int> cls(n, -1);
    CanonicalDecomposition out;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        const int id = static_cast<int>(out.representatives.size());
        cls[v] = id;
        int size = 1;
        for (int u = v + 1; u < n; ++u)
            if (cls[u] < 0 && g.closed_neighborhood(u) == g.closed_neighborhood(v)) {
                cls[u] = id;
                ++size;
            }
        out.representatives.push_back(v);
        out.class_sizes.push_back(size);
    }
    const int k = static_cast<int>(out.representatives.size());
    Graph q(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(out.representatives[i], out.representatives[j])) q.add_edge(i, j);
    out.canonical = q;
    return out;
}

}  // namespace ginertia
