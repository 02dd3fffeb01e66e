#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ginertia/graph.hpp"
#include "ginertia/inertia.hpp"

namespace ginertia {

/// Spectral class of a clique expansion B_k(n_1..n_k), k >= 4 (so that
/// lambda_2 > 0 always):
///   Bplus:  lambda_3 > 0             (p >= 3)
///   B00:    lambda_3 = lambda_4 = 0  (p = 2, eta >= 2)
///   B0:     lambda_4 < lambda_3 = 0  (p = 2, eta = 1)
///   Bminus: lambda_3 < 0             (p = 2, eta = 0)
enum class BkClass { Bplus, B00, B0, Bminus };
const char* to_string(BkClass c);
std::optional<BkClass> bk_class_from_string(const std::string& s);

struct CensusRow {
    BkSpec spec;
    int order = 0;
    BkClass cls = BkClass::Bminus;
    Inertia inertia;
};

/// All C(n-1, k-1) compositions of n into k positive parts, lexicographic.
void for_each_composition(int n, int k, const std::function<void(const BkSpec&)>& fn);
std::vector<BkSpec> compositions(int n, int k);

/// Normalized representative under B(A;B) ~ B(B;A) (odd tail fixed): the
/// dictionary-greater half comes first.
BkSpec dedup_key(const BkSpec& spec);
BkSpec half_swap(const BkSpec& spec);

CensusRow classify_bk(const BkSpec& spec);  // requires k >= 4

/// Every dedup-normalized spec with k parts and order <= n_max, classified,
/// sorted by (order, parts).
std::vector<CensusRow> census(int k, int n_max);

struct EmptinessReport {
    bool empty = true;
    std::vector<CensusRow> offenders;
};

/// Enumerates all compositions of exactly n for each k in [k_lo, k_hi] and
/// reports any row of the target class.
EmptinessReport verify_empty_at(int n, BkClass which, int k_lo, int k_hi);
inline EmptinessReport verify_empty_at_14(BkClass which, int k_lo, int k_hi) {
    return verify_empty_at(14, which, k_lo, k_hi);
}

/// Matches spec (up to the half-swap symmetry) against the parametric
/// Bminus families for k in 4..9; returns the 1-based family index.  The
/// sporadic exceptions of orders 10..12 are not part of the families.
std::optional<int> pattern_match_bminus(const BkSpec& spec);

struct SweepOptions {
    bool dedup = false;        // keep only canonical-edge-mask representatives
    bool allow_large = false;  // lift the order <= 7 guard
};

/// Applies fn to every labeled graph of the given order; returns how many
/// graphs were visited.  Orders above 7 need allow_large.
std::uint64_t sweep_all_graphs(int order, const std::function<void(const Graph&)>& fn,
                               SweepOptions opts = {});

std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows);
/// Grouping by k with per-k counts, mirroring the published summary table.
std::string census_table(const std::vector<CensusRow>& rows);

}  // namespace ginertia
