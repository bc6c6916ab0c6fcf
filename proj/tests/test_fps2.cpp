#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adic2/fps2.hpp"

using namespace adic2;

namespace {

F2Poly poly(std::string_view s) { return F2Poly::parse(s); }

F2Series series_from_bits(std::uint64_t v, unsigned prec) {
  std::vector<std::uint8_t> b(prec);
  for (unsigned i = 0; i < prec; ++i) b[i] = (v >> i) & 1;
  return F2Series(std::move(b));
}

bool is_zero_series(const F2Series& s) {
  for (auto b : s.bits())
    if (b) return false;
  return true;
}

// Exhaustive root search: try every candidate modulo X^(prec+guard) and
// keep the ones annihilating h to that precision, projected back to prec.
std::set<std::string> brute_roots(const F2YQuad& h, unsigned prec,
                                  unsigned guard) {
  unsigned total = prec + guard;
  REQUIRE(total <= 16);
  std::set<std::string> out;
  for (std::uint64_t v = 0; v < (1ull << total); ++v) {
    F2Series y = series_from_bits(v, total);
    if (is_zero_series(eval_quad(h, y)))
      out.insert(to_bit_string(y.truncated(prec)));
  }
  return out;
}

std::set<std::string> root_strings(const SeriesRoots& r) {
  std::set<std::string> out;
  for (const auto& x : r.roots) out.insert(to_bit_string(x));
  return out;
}

F2Poly random_poly(std::mt19937& rng, int max_deg) {
  std::vector<std::uint8_t> b(static_cast<size_t>(max_deg) + 1);
  for (auto& x : b) x = rng() & 1;
  return F2Poly(std::move(b));
}

} // namespace

TEST_CASE("polynomial arithmetic and parsing") {
  CHECK(poly("1 + X^3 + X^5").str() == "1 + X^3 + X^5");
  CHECK(poly("1001").str() == "1 + X^3"); // bit string, low degree first
  CHECK(poly("0").is_zero());
  CHECK(poly("X").degree() == 1);
  CHECK((poly("1+X") * poly("1+X")).str() == "1 + X^2");
  CHECK((poly("1+X") + poly("1+X")).is_zero());
  CHECK(poly("X^2+X^5").valuation() == 2);
  CHECK(F2Poly().valuation() == -1);
  CHECK(F2Poly().degree() == -1);
  CHECK(poly("X^4").shifted_down(2) == poly("X^2"));
  CHECK(poly("X").shifted_up(3) == poly("X^4"));
  CHECK(poly("1+X").pow(3).str() == "1 + X + X^2 + X^3");

  CHECK(gcd(poly("1+X^2"), poly("1+X")) == poly("1+X"));
  CHECK(gcd(poly("X^3"), poly("X^5")) == poly("X^3"));
  CHECK(gcd(F2Poly(), poly("1+X")) == poly("1+X"));

  CHECK(poly("1+X^2+X^4").is_square());
  CHECK(poly("1+X^2+X^4").sqrt() == poly("1+X+X^2"));
  CHECK(!poly("1+X").is_square());
  CHECK_THROWS_AS((void)poly("1+X").sqrt(), error);
  CHECK_THROWS_AS((void)poly("1 + Z"), error);
  CHECK_THROWS_AS((void)poly(""), error);
  CHECK_THROWS_AS((void)poly("X^^2"), error);
}

TEST_CASE("series multiplication and inverse") {
  F2Series one = F2Series::from_poly(F2Poly::one(), 8);
  F2Series x = F2Series::from_poly(poly("X"), 8);
  CHECK(to_bit_string(ps_mul(x, x)) == "00100000");

  // 1/(1+X) = 1 + X + X^2 + ...
  F2Series inv = ps_inv(F2Series::from_poly(poly("1+X"), 6));
  CHECK(to_bit_string(inv) == "111111");
  CHECK(to_bit_string(ps_inv(F2Series::from_poly(poly("1+X^3"), 7))) ==
        "1001001");

  std::mt19937 rng(71);
  for (int it = 0; it < 100; ++it) {
    unsigned p = 1 + rng() % 24;
    F2Series u = series_from_bits(rng() | 1ull, p); // unit constant term
    F2Series w = ps_mul(u, ps_inv(u));
    CHECK(to_bit_string(w) == "1" + std::string(p - 1, '0'));
  }

  CHECK_THROWS_AS((void)ps_inv(F2Series::from_poly(poly("X"), 4)), error);
  CHECK_THROWS_AS((void)ps_inv(F2Series()), error);
}

TEST_CASE("series square root and Frobenius round trip") {
  auto r = ps_sqrt(F2Series::from_poly(poly("X^2+X^4"), 5));
  REQUIRE(r.has_value());
  CHECK(r->precision() == 3);
  CHECK(to_bit_string(*r) == "011");

  CHECK(!ps_sqrt(F2Series::from_poly(poly("X"), 2)).has_value());
  auto one = ps_sqrt(F2Series::from_poly(F2Poly::one(), 4));
  REQUIRE(one.has_value());
  CHECK(to_bit_string(*one) == "10");

  std::mt19937 rng(72);
  for (int it = 0; it < 200; ++it) {
    unsigned p = 1 + rng() % 24;
    F2Series u = series_from_bits(rng(), p);
    auto back = ps_sqrt(ps_mul(u, u));
    REQUIRE(back.has_value());
    CHECK(*back == u.truncated((p + 1) / 2));
  }
}

TEST_CASE("hensel lifting fixtures") {
  // X*Y^2 + Y + X: unique power series root X + X^3 + X^7 + ...
  F2YQuad h1(poly("X"), F2Poly::one(), poly("X"));
  CHECK(to_bit_string(hensel_lift_series(h1, 0, 10)) == "0101000100");

  F2YQuad h2(poly("X"), F2Poly::one(), F2Poly::one());
  CHECK(to_bit_string(hensel_lift_series(h2, 1, 10)) == "1101000100");

  F2YQuad h3(poly("1+X"), F2Poly::one(), poly("X^2"));
  CHECK(to_bit_string(hensel_lift_series(h3, 0, 10)) == "0010110011");
  CHECK(to_bit_string(hensel_lift_series(h3, 1, 10)) == "1101001100");

  // wrong starting parity or non-unit derivative
  CHECK_THROWS_AS((void)hensel_lift_series(h2, 0, 8), error);
  CHECK_THROWS_AS(
      (void)hensel_lift_series(F2YQuad(F2Poly::one(), poly("X"), poly("1+X")),
                               1, 8),
      error);

  // prefix stability
  std::mt19937 rng(73);
  for (int it = 0; it < 50; ++it) {
    F2Poly a = random_poly(rng, 3);
    F2Poly b = random_poly(rng, 3);
    if (b.coeff(0) == 0) b = b + F2Poly::one(); // force b(0) = 1
    F2Poly c = random_poly(rng, 3);
    int a0 = 0; // pick the parity that solves h modulo X
    for (a0 = 0; a0 < 2; ++a0) {
      if (((a0 ? a.coeff(0) ^ b.coeff(0) : 0) ^ c.coeff(0)) == 0) break;
    }
    F2YQuad h = F2YQuad::reduced(a, b, c);
    if (h.b.coeff(0) != 1) continue;
    if (((a0 ? h.a.coeff(0) ^ h.b.coeff(0) : 0) ^ h.c.coeff(0)) != 0) continue;
    F2Series full = hensel_lift_series(h, a0, 16);
    F2Series part = hensel_lift_series(h, a0, 7);
    CHECK(full.truncated(7) == part);
    CHECK(is_zero_series(eval_quad(h, full)));
  }
}

TEST_CASE("root dispatch: unit obstruction cases") {
  auto r = roots_f2series(F2YQuad::parse("Y^2+Y+1"), 10);
  CHECK(r.roots.empty());
  CHECK(r.label == "Case 2");

  auto r2 = roots_f2series(F2YQuad(poly("X"), poly("X"), poly("1+X")), 10);
  CHECK(r2.roots.empty());
  CHECK(r2.label == "Case 2");
}

TEST_CASE("root dispatch: simple lift and double lift") {
  auto r = roots_f2series(F2YQuad(poly("X"), F2Poly::one(), poly("X")), 10);
  CHECK(r.label == "Case 3");
  REQUIRE(r.roots.size() == 1);
  CHECK(to_bit_string(r.roots[0]) == "0101000100");
  CHECK(r.nonintegral_roots == 1); // second root is a Laurent series

  auto lin = roots_f2series(F2YQuad(F2Poly(), poly("1+X"), poly("X")), 8);
  CHECK(lin.label == "Case 3");
  CHECK(lin.nonintegral_roots == 0);
  REQUIRE(lin.roots.size() == 1);
  CHECK(to_bit_string(lin.roots[0]) == "01111111"); // X/(1+X)

  auto r4 = roots_f2series(F2YQuad(poly("1+X"), F2Poly::one(), poly("X^2")), 10);
  CHECK(r4.label == "Case 4");
  REQUIRE(r4.roots.size() == 2);
  CHECK(to_bit_string(r4.roots[0]) == "0010110011");
  CHECK(to_bit_string(r4.roots[1]) == "1101001100");
  // the two roots sum to b/a = 1/(1+X) = 1 + X + X^2 + ...
  CHECK(to_bit_string(ps_add(r4.roots[0], r4.roots[1])) == "1111111111");
}

TEST_CASE("thue-morse annihilator roots") {
  F2YQuad h = F2YQuad::parse("(X+1)^3 Y^2 + (X+1)^2 Y + X");
  CHECK(h.a == poly("1+X").pow(3));
  CHECK(h.b == poly("1+X^2"));
  CHECK(h.c == poly("X"));
  auto r = roots_f2series(h, 11);
  CHECK(r.label == "Case 4");
  REQUIRE(r.roots.size() == 2);
  CHECK(to_bit_string(r.roots[0]) == "01101001100");
  CHECK(to_bit_string(r.roots[1]) == "10010110011");
  for (const auto& x : r.roots) CHECK(is_zero_series(eval_quad(h, x)));
}

TEST_CASE("pure square root case") {
  auto r = roots_f2series(F2YQuad(poly("1+X^2+X^4"), F2Poly(), poly("X^6")), 11);
  CHECK(r.label == "Case 5.2");
  REQUIRE(r.roots.size() == 1);
  CHECK(to_bit_string(r.roots[0]) == "00011011011"); // X^3+X^4+X^6+X^7+X^9+X^10
  CHECK(to_sparse(r.roots[0]) == "X^3 + X^4 + X^6 + X^7 + X^9 + X^10");

  // not a square: no root
  auto none = roots_f2series(F2YQuad(poly("1+X"), F2Poly(), poly("X^2")), 10);
  CHECK(none.label == "Case 5.2");
  CHECK(none.roots.empty());

  auto none2 = roots_f2series(F2YQuad(F2Poly::one(), F2Poly(), poly("X")), 10);
  CHECK(none2.roots.empty());
}

TEST_CASE("shift-substitution case: odd valuation obstruction") {
  // (1+X^2) Y^2 + X^5 Y + X^2: the mod-X^5 square root is X + X^2, which
  // leaves a remainder of odd valuation 7, so there is no root.
  F2YQuad h = F2YQuad::parse("(1+X^2)Y^2 + X^5*Y + X^2");
  for (unsigned prec : {5u, 10u, 14u}) {
    auto r = roots_f2series(h, prec);
    CHECK(r.roots.empty());
    CHECK(r.label == "Case 5.1 -> Case 2");
  }
  CHECK(brute_roots(h, 6, 8).empty());
}

TEST_CASE("shift-substitution case: repeated descent finds roots") {
  // Here the remainder valuation e = 4 is even and below 2m = 8, so the
  // substitution must shift by X^(e/2) and re-run; stopping at the first
  // reduction would wrongly report no roots.
  F2YQuad h(poly("1+X^3"), poly("X^4"), poly("1+X^2+X^3"));
  auto r = roots_f2series(h, 5);
  CHECK(r.label == "Case 5.1 -> Case 5.1 -> Case 5.1 -> Case 4");
  REQUIRE(r.roots.size() == 2);
  CHECK(to_bit_string(r.roots[0]) == "11110");
  CHECK(to_bit_string(r.roots[1]) == "11111");

  auto r10 = roots_f2series(h, 10);
  REQUIRE(r10.roots.size() == 2);
  for (const auto& x : r10.roots) CHECK(is_zero_series(eval_quad(h, x)));
  CHECK(root_strings(r10) == brute_roots(h, 10, 4));
}

TEST_CASE("shift-substitution case: exact split") {
  // c2 = a*d1^2 + b*d1 + c vanishes exactly: h factors over F2[[X]] and
  // both roots come back through the Case 4 branch of the reduced quad.
  F2Poly a = poly("1+X");
  F2Poly d1 = poly("1+X");
  F2Poly b = poly("X^3+X^4");
  F2Poly c = a * d1 * d1 + b * d1; // forces h(d1) = 0
  F2YQuad h = F2YQuad::reduced(a, b, c);
  auto r = roots_f2series(h, 12);
  CHECK(r.label == "Case 5.1 -> Case 4");
  REQUIRE(r.roots.size() == 2);
  std::set<std::string> got = root_strings(r);
  CHECK(got.count(to_bit_string(F2Series::from_poly(d1, 12))) == 1);
  CHECK(got.count(to_bit_string(F2Series::from_poly(poly("1+X+X^3"), 12))) == 1);
  for (const auto& x : r.roots) CHECK(is_zero_series(eval_quad(h, x)));

  // a variant whose square root changes below X^m: the descent takes one
  // extra shift before splitting
  F2Poly b2 = poly("X^3+X^5");
  F2Poly d2 = poly("1+X^2");
  F2Poly c2 = a * d2 * d2 + b2 * d2;
  F2YQuad h2 = F2YQuad::reduced(a, b2, c2);
  auto r2 = roots_f2series(h2, 12);
  CHECK(r2.label == "Case 5.1 -> Case 5.1 -> Case 4");
  REQUIRE(r2.roots.size() == 2);
  CHECK(root_strings(r2).count(to_bit_string(F2Series::from_poly(d2, 12))) == 1);
  for (const auto& x : r2.roots) CHECK(is_zero_series(eval_quad(h2, x)));
}

TEST_CASE("root counts match the constant-term table") {
  std::mt19937 rng(74);
  int seen[5] = {0, 0, 0, 0, 0};
  for (int it = 0; it < 400; ++it) {
    F2Poly a = random_poly(rng, 4);
    F2Poly b = random_poly(rng, 4);
    F2Poly c = random_poly(rng, 4);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    F2Poly g = gcd(gcd(a, b), c);
    if (g.degree() != 0) continue;
    F2YQuad h(a, b, c);
    int a0 = h.a.coeff(0), b0 = h.b.coeff(0), c0 = h.c.coeff(0);
    auto r = roots_f2series(h, 8);
    if (b0 == 1) {
      if (a0 == 1 && c0 == 1) {
        CHECK(r.roots.empty());
        ++seen[0];
      } else if (a0 == 1 && c0 == 0) {
        CHECK(r.roots.size() == 2);
        ++seen[1];
      } else {
        CHECK(r.roots.size() == 1);
        ++seen[2];
      }
    } else if (a0 == 0) {
      CHECK(r.roots.empty());
      ++seen[3];
    } else {
      CHECK(r.roots.size() <= 2);
      ++seen[4];
    }
    for (const auto& x : r.roots) CHECK(is_zero_series(eval_quad(h, x)));
  }
  for (int k = 0; k < 5; ++k) CHECK(seen[k] > 10);
}

TEST_CASE("root finder agrees with exhaustive enumeration") {
  std::mt19937 rng(75);
  int checked = 0, skipped = 0;
  while (checked < 120) {
    F2Poly a = random_poly(rng, 4);
    F2Poly b = random_poly(rng, 4);
    F2Poly c = random_poly(rng, 4);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    F2YQuad h = F2YQuad::reduced(a, b, c);
    // only trust the enumeration where it has stabilized
    auto lo = brute_roots(h, 5, 4);
    auto hi = brute_roots(h, 5, 8);
    if (lo != hi) {
      ++skipped;
      REQUIRE(skipped < 200);
      continue;
    }
    auto r = roots_f2series(h, 5);
    CHECK(root_strings(r) == hi);
    ++checked;
  }
}

TEST_CASE("root sets are prefix-stable across precision") {
  std::mt19937 rng(76);
  for (int it = 0; it < 150; ++it) {
    F2Poly a = random_poly(rng, 4);
    F2Poly b = random_poly(rng, 4);
    F2Poly c = random_poly(rng, 4);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    F2YQuad h = F2YQuad::reduced(a, b, c);
    auto full = roots_f2series(h, 14);
    auto part = roots_f2series(h, 8);
    std::set<std::string> projected;
    for (const auto& x : full.roots)
      projected.insert(to_bit_string(x.truncated(8)));
    CHECK(projected == root_strings(part));
    CHECK(full.label == part.label);
  }
}

TEST_CASE("quadratic parsing forms") {
  F2YQuad h1 = F2YQuad::parse("(1+X^2)Y^2 + X^5*Y + X^2");
  CHECK(h1.a == poly("1+X^2"));
  CHECK(h1.b == poly("X^5"));
  CHECK(h1.c == poly("X^2"));

  F2YQuad h2 = F2YQuad::parse("a=1+X^2; b=X^5; c=X^2");
  CHECK(h2.a == h1.a);
  CHECK(h2.b == h1.b);
  CHECK(h2.c == h1.c);

  F2YQuad h3 = F2YQuad::parse("a=101;b=000001;c=001");
  CHECK(h3.a == poly("1+X^2"));
  CHECK(h3.b == poly("X^5"));
  CHECK(h3.c == poly("X^2"));

  // juxtaposition, redundant '*', and parenthesized powers
  F2YQuad h4 = F2YQuad::parse("(1+X)(1+X)Y^2 + Y + 1");
  CHECK(h4.a == poly("1+X^2"));
  F2YQuad h5 = F2YQuad::parse("(Y+X)^2 + Y + X");
  CHECK(h5.a == F2Poly::one());
  CHECK(h5.b == F2Poly::one());
  CHECK(h5.c == poly("X+X^2"));

  // common content is divided out
  F2YQuad h6 = F2YQuad::parse("X*Y^2 + X");
  CHECK(h6.a == F2Poly::one());
  CHECK(h6.b.is_zero());
  CHECK(h6.c == F2Poly::one());

  // round trip through str()
  F2YQuad h7 = F2YQuad::parse(h1.str());
  CHECK(h7.a == h1.a);
  CHECK(h7.b == h1.b);
  CHECK(h7.c == h1.c);
  CHECK(F2YQuad::parse("Y^2+Y+1").str() == "Y^2 + Y + 1");

  CHECK_THROWS_AS((void)F2YQuad::parse("Y^3 + 1"), error);
  CHECK_THROWS_AS((void)F2YQuad::parse("Y*Y*Y + 1"), error);
  CHECK_THROWS_AS((void)F2YQuad::parse("(1+X"), error);
  CHECK_THROWS_AS((void)F2YQuad::parse("2Y^2 + 1"), error);
  CHECK_THROWS_AS((void)F2YQuad::parse("0"), error);
  CHECK_THROWS_AS((void)F2YQuad::parse("a=0;b=0;c=0"), error);
}

TEST_CASE("series parsing and rendering") {
  F2Series s = parse_series("0101000100");
  CHECK(s.precision() == 10);
  CHECK(to_sparse(s) == "X + X^3 + X^7");
  CHECK(parse_series("X + X^3 + X^7", 10) == s);
  CHECK(parse_series("1 + X^3").precision() == 4);
  CHECK(to_sparse(parse_series("0000")) == "0");
  CHECK(to_bit_string(parse_series("1", 5)) == "10000");
  CHECK_THROWS_AS((void)parse_series("X^9", 4), error);

  CHECK(lex_less(parse_series("0110"), parse_series("1000")));
  CHECK(!lex_less(parse_series("1000"), parse_series("0110")));
}
