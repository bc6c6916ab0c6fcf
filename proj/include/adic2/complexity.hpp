#pragma once

#include <string>
#include <vector>

#include "adic2/dyadic.hpp"
#include "adic2/seqgen.hpp"

namespace adic2 {

// q * (prefix value) = f mod 2^witness_n, with q positive and odd.
struct RationalRep {
  mpz_class f;
  mpz_class q;
  unsigned witness_n = 0;
};

// Minimal max{|f|, q} over odd q > 0, plus the tie-broken representative
// (smallest q, then smallest |f|, then f > 0).
struct AdicMin {
  mpz_class lambda_exact;
  RationalRep rep;
};

// Exhaustive scan over odd q; stops once q exceeds the best value found.
// Guarded at n <= 44 (errc::prefix_too_long).
AdicMin adic_bruteforce(const BitString& s, unsigned n);

// Same minimum via the rank-2 approximation lattice {(f, q) : f = q*x mod
// 2^n}: Gauss-reduce, find a feasible odd-q point by radius doubling, then
// enumerate the sup-norm ball to certify minimality.
AdicMin adic_lattice(const BitString& s, unsigned n);

// True when some pair (f, q) with q odd, q != 0, f = q*x mod 2^n has
// max{|f|, |q|} <= radius. Exposed for minimality-certificate checks.
bool lattice_ball_has_point(const BitString& s, unsigned n,
                            const mpz_class& radius);

enum class adic_method { bruteforce, lattice, auto_select };

struct ProfileRow {
  unsigned n = 0;
  mpz_class lambda_exact;     // capital-Lambda, exact
  double lambda_log2 = 0.0;   // log2 of it
  RationalRep rep;
  unsigned lin_complexity = 0; // shortest LFSR length for the prefix
};

struct ComplexityProfile {
  BitString bits;
  std::vector<ProfileRow> rows; // rows[k] describes prefix length k+1
};

// Per-N exact profile. auto_select runs the lattice method and cross-checks
// it against the exhaustive scan for n <= 24. Monotonicity and the step
// inequality Lambda(N+1)*Lambda(N) <= Lambda(N)^2 + 2^N are asserted.
ComplexityProfile adic_profile(const BitString& s,
                               adic_method method = adic_method::auto_select);

// L(N) for every prefix, Berlekamp-Massey over F2.
std::vector<unsigned> berlekamp_massey_profile(const BitString& s);

struct BoundReport {
  unsigned n = 0;
  unsigned d = 0;
  mpz_class height;        // H = sum of |coefficients|
  bool lower_holds = false; // exact integer form H * Lambda^d >= 2^N
  bool upper_holds = false; // float form with 1e-9 tolerance
  double lower = 0.0;       // N/d - log2(H)/d
  double upper = 0.0;       // (d-1)N/d + log2(H)/d + 1.3
};

// Requires deg(h) >= 2 (errc::degree_too_low) and no rational roots
// (errc::rational_root); the profile must come from a root of h.
std::vector<BoundReport> height_degree_bounds(const IntPoly& h,
                                         const ComplexityProfile& p);

struct InvariantReport {
  bool ok = true;
  unsigned first_violation_n = 0;
  std::string message;
};

// Monotonicity of Lambda and the exact step inequality; violations are
// reported, not thrown.
InvariantReport check_profile_invariants(const ComplexityProfile& p);

struct RothReport {
  double eps = 0.0;
  bool aperiodic_claimed = false;
  std::vector<unsigned> violations; // N with lambda(N) <= N/(2+eps)
  unsigned largest_violation = 0;   // 0 when none
  std::string warning;
};

// Observational check of lambda(N) > N/(2+eps); never an assertion, since
// the threshold index is not effective.
RothReport roth_observation(const ComplexityProfile& p, double eps,
                            bool aperiodic);

double log2_mpz(const mpz_class& v); // v >= 1

// Header N,Lambda,lambda_log2,f,q,L; lambda_log2 with 6 decimals.
std::string profile_csv(const ComplexityProfile& p);

} // namespace adic2
