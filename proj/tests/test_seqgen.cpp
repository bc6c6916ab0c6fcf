#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "adic2/seqgen.hpp"

using namespace adic2;

namespace {

BitString bits(std::string_view s) {
  BitString out;
  for (char ch : s) out.push_back(static_cast<std::uint8_t>(ch - '0'));
  return out;
}

// multiplicative order of 2 modulo odd q >= 1
unsigned long ord2(const mpz_class& q) {
  if (q == 1) return 1;
  mpz_class t = 2 % q;
  unsigned long k = 1;
  while (t != 1) {
    t = (2 * t) % q;
    ++k;
    REQUIRE(k < 100000);
  }
  return k;
}

FcsrState random_machine(std::mt19937& rng, unsigned max_len) {
  unsigned L = 1 + rng() % max_len;
  std::vector<std::uint8_t> taps(L), reg(L);
  for (auto& b : taps) b = rng() & 1;
  for (auto& b : reg) b = rng() & 1;
  return FcsrState(taps, reg, mpz_class(rng() % 4));
}

} // namespace

TEST_CASE("thue-morse generation") {
  CHECK(gen_thue_morse(11) == bits("01101001100"));
  CHECK(gen_thue_morse(1) == bits("0"));
  CHECK(gen_thue_morse(4) == bits("0110"));
  CHECK(gen_thue_morse(0).empty());

  BitString t = gen_thue_morse(2000);
  for (unsigned n = 0; 2 * n + 1 < 2000; ++n) {
    CHECK(t[2 * n] == t[n]);
    CHECK(t[2 * n + 1] == 1 - t[n]);
  }

  // same bits as the series root of its annihilator
  auto r = roots_f2series(F2YQuad::parse("(X+1)^3 Y^2 + (X+1)^2 Y + X"), 11);
  REQUIRE(r.roots.size() == 2);
  CHECK(from_series(r.roots[0]) == gen_thue_morse(11));
  CHECK(from_series(r.roots[1]) == dual(gen_thue_morse(11)));
}

TEST_CASE("dual sequence") {
  CHECK(dual(bits("0110")) == bits("1001"));
  CHECK(dual(BitString{}).empty());
  CHECK(dual(bits("00000")) == bits("11111"));
  BitString t = gen_thue_morse(301);
  CHECK(dual(dual(t)) == t);
}

TEST_CASE("dyadic conversions") {
  auto roots17 = sqrt_2adic(17, 10);
  REQUIRE(!roots17.empty());
  CHECK(from_dyadic(roots17[0]) == bits("1001011101"));

  auto roots_m7 = sqrt_2adic(-7, 10);
  REQUIRE(!roots_m7.empty());
  CHECK(from_dyadic(roots_m7[0]) == bits("1010110100"));

  CHECK(from_dyadic(DyadicInt(0, 4)) == bits("0000"));

  for (long d : {17L, -7L, 33L, 73L}) {
    auto rs = sqrt_2adic(d, 20);
    REQUIRE(!rs.empty());
    DyadicInt back = to_dyadic(from_dyadic(rs[0]));
    CHECK(back == rs[0]);
    CHECK(dy_mul(back, back) == DyadicInt(d, 20));
  }

  F2Series s = parse_series("0101000100");
  CHECK(from_series(s) == bits("0101000100"));
  CHECK(to_series(bits("0101000100")) == s);
}

TEST_CASE("fcsr single steps") {
  { // constant-1 fixed point
    FcsrState st({1}, {1}, 0);
    auto [next, out] = fcsr_step(st);
    CHECK(out == 1);
    CHECK(next.reg == std::vector<std::uint8_t>{1});
    CHECK(next.carry == 0);
    CHECK(fcsr_run(st, 5) == bits("11111"));
  }
  { // hand-stepped two-cell machine
    FcsrState st({1, 1}, {1, 0}, 0);
    auto [next, out] = fcsr_step(st);
    CHECK(out == 1);
    CHECK(next.reg == (std::vector<std::uint8_t>{0, 1}));
    CHECK(next.carry == 0);
  }
  { // no feedback: emits the seed then zeros
    FcsrState st({0}, {1}, 0);
    CHECK(fcsr_run(st, 5) == bits("10000"));
  }
  CHECK(fcsr_run(FcsrState({1}, {1}, 0), 0).empty());

  CHECK_THROWS_AS(FcsrState({1}, {1, 0}, 0), error);
  CHECK_THROWS_AS(FcsrState({}, {}, 0), error);
  CHECK_THROWS_AS(FcsrState({2}, {1}, 0), error);
  CHECK_THROWS_AS(FcsrState({1}, {3}, 0), error);
  CHECK_THROWS_AS(FcsrState({1}, {1}, -1), error);
}

TEST_CASE("fcsr connection integer and fraction") {
  FcsrState third({0, 1, 0}, {1, 1, 0}, 0);
  CHECK(fcsr_connection(third) == 3);
  auto [f, q] = fcsr_fraction(third);
  CHECK(f == 1);
  CHECK(q == 3);
  CHECK(fcsr_run(third, 8) == from_dyadic(rational_expand(1, 3, 8)));

  FcsrState ones({1}, {1}, 0);
  auto [f1, q1] = fcsr_fraction(ones);
  CHECK(f1 == -1);
  CHECK(q1 == 1);

  // connection integers are always odd
  std::mt19937 rng(81);
  for (int it = 0; it < 50; ++it) {
    FcsrState st = random_machine(rng, 6);
    mpz_class qq = fcsr_connection(st);
    CHECK(mpz_tstbit(qq.get_mpz_t(), 0) == 1);
  }
}

TEST_CASE("fcsr streams are the 2-adic expansions of f/q") {
  std::mt19937 rng(82);
  for (int it = 0; it < 120; ++it) {
    FcsrState st = random_machine(rng, 5);
    auto [f, q] = fcsr_fraction(st);
    REQUIRE(q > 0);
    CHECK(fcsr_run(st, 40) == from_dyadic(rational_expand(f, q, 40)));
  }
}

TEST_CASE("fcsr carry stays bounded") {
  std::mt19937 rng(83);
  for (int it = 0; it < 60; ++it) {
    unsigned L = 1 + rng() % 5;
    std::vector<std::uint8_t> taps(L), reg(L);
    mpz_class wt = 0;
    for (auto& b : taps) {
      b = rng() & 1;
      wt += b;
    }
    for (auto& b : reg) b = rng() & 1;
    FcsrState st(taps, reg, mpz_class(rng() % 10));
    for (int step = 0; step < 200; ++step) {
      auto [next, out] = fcsr_step(st);
      (void)out;
      CHECK(next.carry <= std::max(st.carry, wt));
      st = std::move(next);
    }
    CHECK(st.carry <= wt); // long-run bound
  }
}

TEST_CASE("fcsr period divides the order of 2 mod q") {
  std::mt19937 rng(84);
  for (int it = 0; it < 60; ++it) {
    FcsrState st = random_machine(rng, 5);
    auto [f, q] = fcsr_fraction(st);
    mpz_class g, fq = f;
    mpz_gcd(g.get_mpz_t(), fq.get_mpz_t(), q.get_mpz_t());
    mpz_class qr = q / g;
    unsigned long p = ord2(qr); // a period of the reduced tail
    unsigned long transient = st.taps.size() + 16;
    BitString out = fcsr_run(st, static_cast<unsigned>(transient + 3 * p));
    for (size_t n = transient; n + p < out.size(); ++n)
      CHECK(out[n] == out[n + p]);
    CHECK(ord2(q) % p == 0); // so the minimal period divides ord(2 mod q)
  }
}

TEST_CASE("bitstring files round trip") {
  CHECK(parse_bits("0110") == bits("0110"));
  CHECK(parse_bits("01 10\n11") == bits("011011"));
  CHECK(parse_bits("").empty());
  CHECK_THROWS_AS((void)parse_bits("01x0"), error);
  try {
    (void)parse_bits("01x0");
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_file);
  }

  // 64-bit line wrap
  BitString long_bits(130, 1);
  std::string text = format_bits(long_bits);
  CHECK(text.size() == 133);
  CHECK(text[64] == '\n');
  CHECK(text[129] == '\n');
  CHECK(text.back() == '\n');
  CHECK(parse_bits(text) == long_bits);

  std::mt19937 rng(85);
  BitString rand_bits(1000);
  for (auto& b : rand_bits) b = rng() & 1;
  const std::string path = "seqgen_roundtrip.tmp";
  store_bits(path, rand_bits);
  CHECK(load_bits(path) == rand_bits);
  std::remove(path.c_str());

  CHECK_THROWS_AS((void)load_bits("no_such_dir/no_such_file.bits"), error);

  CHECK(bits_to_line(bits("0110")) == "0110");
  CHECK(format_bits(BitString{}) == "\n");
}
