#pragma once

#include <string>
#include <vector>

namespace adic2 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail; // statistics, first counterexample, or warning text
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// The four named fixture suites: paper-examples, bounds, oracles, profiles.
std::vector<std::string> verify_suite_names();
SuiteResult run_verify_suite(const std::string& name, unsigned seed = 1,
                             const std::string& out_dir = ".");

// Reproduce the ten reference expansions bit-exactly at their stated
// precision (quadratic surds, the five polynomial root listings, the
// Thue-Morse pair).
CheckResult check_reference_expansions();

// Closed forms for the Thue-Morse linear complexity profile and its dual,
// every prefix length up to max_n.
CheckResult check_tm_linear_formulas(unsigned max_n = 4096);

// For five degree-2 integer polynomials without rational roots: exact
// integer lower bound and float upper bound on the 2-adic complexity of
// the root sequences, all prefix lengths up to max_n.
CheckResult check_height_degree_bounds(unsigned max_n = 40);

// Cross-method agreement: lattice vs exhaustive rational minimization
// (all 2^16 length-16 sequences plus 500 random per length 17..24) and
// Berlekamp-Massey vs direct recurrence solving (1000 random length-14,
// every prefix).
CheckResult check_method_equivalence(unsigned seed = 1);

// Monotonicity and the step inequality on a batch of freshly computed
// profiles; zero tolerance.
CheckResult check_profile_invariant_suite(unsigned seed = 1);

// Exact integer-form window on the Thue-Morse 2-adic complexity:
// Lambda^5 >= 2^N for 4 <= N <= 40, and 2^12 * Lambda^4 > 2^N,
// Lambda^4 < 2^(3N+4) for 1 <= N <= 40.
CheckResult check_tm_adic_range();

// Emit profile CSVs (N <= 100) for the sqrt(17) and sqrt(-7) sequences
// and record the soft observation |L(N) - N/2| <= 10 for 20 <= N <= 100;
// a miss downgrades to a warning, never a failure.
CheckResult check_surd_profiles(const std::string& out_dir = ".");

} // namespace adic2
