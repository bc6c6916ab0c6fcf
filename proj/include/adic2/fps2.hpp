#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adic2/error.hpp"

namespace adic2 {

// Polynomial over F2, bit i = coefficient of X^i. Zero polynomial has
// degree -1 (sentinel) and an empty coefficient vector.
class F2Poly {
public:
  F2Poly() = default;
  explicit F2Poly(std::vector<std::uint8_t> bits);
  static F2Poly one();
  static F2Poly x_pow(unsigned e);
  static F2Poly parse(std::string_view text); // "1 + X^3" or bit string "1001"

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  int valuation() const; // lowest set index, -1 for zero
  int coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint8_t>& bits() const { return c_; }

  F2Poly operator+(const F2Poly& o) const; // XOR
  F2Poly operator*(const F2Poly& o) const;
  bool operator==(const F2Poly&) const = default;
  F2Poly shifted_up(unsigned t) const;   // * X^t
  F2Poly shifted_down(unsigned t) const; // / X^t, requires valuation >= t
  F2Poly pow(unsigned e) const;

  bool is_square() const; // all odd-indexed coefficients zero
  F2Poly sqrt() const;    // requires is_square()
  std::string str() const;

  friend F2Poly gcd(F2Poly a, F2Poly b);

private:
  std::vector<std::uint8_t> c_;
};

// Truncated power series over F2: exactly `precision` known coefficients.
class F2Series {
public:
  F2Series() = default;
  explicit F2Series(std::vector<std::uint8_t> bits);
  static F2Series from_poly(const F2Poly& p, unsigned precision);

  unsigned precision() const { return static_cast<unsigned>(c_.size()); }
  int coeff(unsigned i) const;
  const std::vector<std::uint8_t>& bits() const { return c_; }
  F2Series truncated(unsigned precision) const;

  bool operator==(const F2Series&) const = default;

private:
  std::vector<std::uint8_t> c_;
};

bool lex_less(const F2Series& a, const F2Series& b);

F2Series ps_add(const F2Series& x, const F2Series& y); // min precision
F2Series ps_mul(const F2Series& x, const F2Series& y); // min precision
F2Series ps_inv(const F2Series& x);                    // errc::non_unit if x(0) = 0
// Defined when every odd-indexed coefficient below the precision is zero;
// result precision is ceil(prec / 2).
std::optional<F2Series> ps_sqrt(const F2Series& x);

// h(Y) = a(X) Y^2 + b(X) Y + c(X) with gcd(a,b,c) = 1, not all zero.
struct F2YQuad {
  F2YQuad(F2Poly a, F2Poly b, F2Poly c);
  static F2YQuad reduced(F2Poly a, F2Poly b, F2Poly c); // divides by the gcd
  // "(1+X^2)Y^2 + X^5*Y + X^2" or "a=1+X^2; b=X^5; c=X^2"
  static F2YQuad parse(std::string_view text);
  std::string str() const;

  F2Poly a, b, c;
};

// Unique root with constant term a0; needs h(a0) = 0 mod X and b(0) = 1
// (h'(Y) = b in characteristic 2). errc::not_liftable otherwise.
F2Series hensel_lift_series(const F2YQuad& h, int a0, unsigned prec);

struct SeriesRoots {
  std::vector<F2Series> roots; // lexicographic by coefficient sequence
  std::string label;           // dispatch chain, e.g. "Case 5.1 -> Case 4"
  int nonintegral_roots = 0;   // Laurent roots outside F2[[X]] (Case 3)
};

// All roots of h in F2[[X]] to prec terms, by the case dispatch on
// (a(0), b(0), c(0)) with the valuation-shift substitution for Case 5.1.
SeriesRoots roots_f2series(const F2YQuad& h, unsigned prec);

F2Series eval_quad(const F2YQuad& h, const F2Series& y);

std::string to_bit_string(const F2Series& s);
std::string to_sparse(const F2Series& s);
F2Series parse_series(std::string_view text, unsigned precision = 0);

} // namespace adic2
