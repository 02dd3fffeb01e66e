#pragma once

#include <cstdint>
#include <string>

namespace ginertia {

/// Outcome of one verification procedure; `detail` is a short human-readable
/// summary (counts on success, the first counterexamples on failure).
struct CheckResult {
    bool ok = false;
    std::string detail;
};

CheckResult check_table1();
CheckResult check_appendix_histogram();
CheckResult check_b0_empty_14();
CheckResult check_bminus_empty_14();

/// Printed example spectra and their exact inertias.
CheckResult check_spectra_examples();

/// Seeded random add-transformation trials per kind: (p, n_neg) preserved,
/// eta incremented, delete round-trips to the original graph.
CheckResult check_transform_trials(int trials, std::uint64_t seed);

/// Exhaustive labeled sweep at the given order: disconnected membership in G
/// coincides with a branch of the disconnected characterization.
CheckResult check_theorem_disconnected_sweep(int order);

/// Exhaustive labeled sweep: pendant-form equivalence (match iff p = 2, with
/// the nullity identity), and every connected member of G certified by at
/// least one branch: pendant form with d = 1, a congruent-vertex witness, or
/// a clique-expansion match.
CheckResult check_theorem_main_sweep(int order);

/// inertia_exact agrees with the float oracle on every labeled graph of
/// order <= max_order.
CheckResult check_oracle_exhaustive(int max_order);

/// ... and on all 802 census members.
CheckResult check_oracle_bstar();

/// Census members decompose onto gn(k), 4 <= k <= 13, with the strict
/// cross-neighborhood chains and t_c = ceil(k/2) - 1 on the quotient.
CheckResult check_bstar_structure();

/// gn(n) embeds induced into gn(n+1) for 2 <= n <= 13.
CheckResult check_gn_chain();

/// At order 13 for k in 4..9, the Bminus census rows are exactly the
/// parametric-family matches.
CheckResult check_bminus_patterns_n13();

}  // namespace ginertia
