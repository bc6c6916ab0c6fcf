#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "adic2/error.hpp"

namespace adic2 {

// A 2-adic integer known modulo 2^precision. The stored value is the
// canonical residue in [0, 2^precision).
class DyadicInt {
public:
  DyadicInt() = default;
  DyadicInt(mpz_class v, unsigned precision);

  unsigned precision() const { return prec_; }
  const mpz_class& value() const { return v_; }
  int bit(unsigned i) const;
  DyadicInt truncated(unsigned precision) const;

  bool operator==(const DyadicInt&) const = default;

private:
  mpz_class v_ = 0;
  unsigned prec_ = 0;
};

// Compares bit sequences lexicographically from bit 0 upward.
bool lex_less(const DyadicInt& a, const DyadicInt& b);

DyadicInt dy_add(const DyadicInt& x, const DyadicInt& y);
DyadicInt dy_mul(const DyadicInt& x, const DyadicInt& y);
DyadicInt dy_inv(const DyadicInt& x); // errc::even_unit unless x is odd

// h(Y) = h0 + h1*Y + ... + hd*Y^d with hd != 0.
class IntPoly {
public:
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly parse(std::string_view text); // e.g. "3Y^2 - 4Y + 9"

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(unsigned i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  mpz_class height_sum() const; // H = sum of |h_i|
  mpz_class eval(const mpz_class& y) const;
  bool has_rational_root() const;
  std::string str() const;

private:
  std::vector<mpz_class> c_;
};

// Square roots of D in Z2 at precision k: empty unless D = 0 or D = 4^m*d
// with d = 1 mod 8. The first root's odd part is = 1 mod 4.
std::vector<DyadicInt> sqrt_2adic(const mpz_class& D, unsigned k);

// Newton lifting of the simple root with parity a0.
// Requires h(a0) even and h'(a0) odd; errc::not_a_simple_root otherwise.
DyadicInt hensel_lift_simple(const IntPoly& h, int a0, unsigned k);

enum class z2_case {
  constant,
  linear,
  case_1_1,   // b even, a odd
  case_1_2,   // b even, a even
  case_2_1_1, // a, b, c all odd
  case_2_1_2, // a, b odd, c even
  case_2_2,   // b odd, a even
  general,    // degree >= 3, lifting tree
};
const char* z2_case_name(z2_case c);

struct Z2Roots {
  std::vector<DyadicInt> roots; // lexicographic by bit sequence
  z2_case label = z2_case::general;
  int nonintegral_roots = 0; // roots in Q2 \ Z2, counted but not returned
};

// All roots of h in Z2, truncated to k bits and deduplicated.
// errc::lifting_tree_overflow if the residue tree exceeds 8*degree nodes.
Z2Roots roots_z2(const IntPoly& h, unsigned k);

// Expansion of f/q in Z2; q must be odd (errc::even_denominator).
DyadicInt rational_expand(const mpz_class& f, const mpz_class& q, unsigned k);

DyadicInt eval_mod2k(const IntPoly& h, const DyadicInt& x);

// Text forms: low-bit-first bit string ("1001011101") and sparse
// ("1 + 2^3 + 2^5"). parse accepts both; precision 0 means inferred.
std::string to_bit_string(const DyadicInt& x);
std::string to_sparse(const DyadicInt& x);
DyadicInt parse_dyadic(std::string_view text, unsigned precision = 0);

} // namespace adic2
