#pragma once

#include <map>
#include <vector>

#include "ginertia/graph.hpp"

namespace ginertia::reference {

/// Known-good per-k counts of the B0 census at order <= 13 (total 802).
const std::map<int, int>& b0_counts();

/// Known-good order histogram of the B0 rows for k in 6..10 (total 706).
const std::map<int, int>& b0_order_histogram_k6_10();

/// Verbatim B0 member lists for k in {4, 5, 11, 12, 13}.
const std::vector<BkSpec>& b0_list(int k);
bool has_b0_list(int k);

}  // namespace ginertia::reference
