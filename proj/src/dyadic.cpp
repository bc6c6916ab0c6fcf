#include "adic2/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdint>

namespace adic2 {
namespace {

mpz_class mod2k(const mpz_class& v, unsigned k) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

constexpr unsigned kInfVal = UINT_MAX;

unsigned v2(const mpz_class& z) {
  if (z == 0) return kInfVal;
  return static_cast<unsigned>(mpz_scan1(z.get_mpz_t(), 0));
}

mpz_class inv_mod2k(const mpz_class& u, unsigned k) {
  mpz_class m = mpz_class(1) << k, r;
  if (!mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()))
    fail(errc::even_unit, "no inverse modulo 2^" + std::to_string(k));
  return r;
}

mpz_class eval_mod(const IntPoly& h, const mpz_class& y, unsigned k) {
  mpz_class acc = 0;
  for (int i = h.degree(); i >= 0; --i) acc = mod2k(acc * y + h.coeff(i), k);
  return acc;
}

// Truncation of the square root of d (odd, d = 1 mod 8) whose value is
// = 1 mod 4, correct modulo 2^bits.
mpz_class sqrt_odd(const mpz_class& d, unsigned bits) {
  mpz_class y = 1;
  for (unsigned j = 3; j <= bits; ++j) {
    mpz_class e = mod2k(y * y - d, j + 1);
    if (mpz_tstbit(e.get_mpz_t(), j)) y += mpz_class(1) << (j - 1);
  }
  return mod2k(y, bits);
}

} // namespace

DyadicInt::DyadicInt(mpz_class v, unsigned precision) : prec_(precision) {
  v_ = mod2k(v, precision);
}

int DyadicInt::bit(unsigned i) const {
  if (i >= prec_) fail(errc::invalid_argument, "bit index beyond precision");
  return mpz_tstbit(v_.get_mpz_t(), i) ? 1 : 0;
}

DyadicInt DyadicInt::truncated(unsigned precision) const {
  if (precision > prec_)
    fail(errc::invalid_argument, "cannot extend precision by truncation");
  return DyadicInt(v_, precision);
}

bool lex_less(const DyadicInt& a, const DyadicInt& b) {
  mpz_class x = a.value() ^ b.value();
  if (x == 0) return a.precision() < b.precision();
  unsigned i = v2(x);
  return !mpz_tstbit(a.value().get_mpz_t(), i);
}

DyadicInt dy_add(const DyadicInt& x, const DyadicInt& y) {
  if (x.precision() != y.precision())
    fail(errc::invalid_argument, "precision mismatch");
  return DyadicInt(x.value() + y.value(), x.precision());
}

DyadicInt dy_mul(const DyadicInt& x, const DyadicInt& y) {
  if (x.precision() != y.precision())
    fail(errc::invalid_argument, "precision mismatch");
  return DyadicInt(x.value() * y.value(), x.precision());
}

DyadicInt dy_inv(const DyadicInt& x) {
  if (x.precision() == 0 || mpz_even_p(x.value().get_mpz_t()))
    fail(errc::even_unit, "cannot invert an even 2-adic value");
  return DyadicInt(inv_mod2k(x.value(), x.precision()), x.precision());
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) fail(errc::invalid_argument, "zero polynomial");
}

mpz_class IntPoly::coeff(unsigned i) const {
  return i < c_.size() ? c_[i] : mpz_class(0);
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  mpz_class g = content();
  if (g == 1) return *this;
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (degree() == 0) fail(errc::invalid_argument, "derivative of a constant is zero");
  std::vector<mpz_class> out;
  out.reserve(c_.size() - 1);
  for (unsigned i = 1; i < c_.size(); ++i) out.push_back(c_[i] * i);
  return IntPoly(std::move(out));
}

mpz_class IntPoly::height_sum() const {
  mpz_class h = 0;
  for (const auto& c : c_) h += abs(c);
  return h;
}

mpz_class IntPoly::eval(const mpz_class& y) const {
  mpz_class acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * y + c_[i];
  return acc;
}

bool IntPoly::has_rational_root() const {
  if (c_[0] == 0) return true;
  if (degree() == 1) return true;
  if (degree() == 2) {
    mpz_class disc = c_[1] * c_[1] - 4 * c_[2] * c_[0];
    return disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t());
  }
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class i = 1; i * i <= a && i < 2000000; ++i)
      if (a % i == 0) {
        out.push_back(i);
        out.push_back(a / i);
      }
    return out;
  };
  for (const auto& p : divisors(c_[0]))
    for (const auto& q : divisors(c_.back())) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        // evaluate sum h_i * (sign*p)^i * q^(d-i)
        mpz_class acc = 0, pp = sign * p, qp = 1;
        for (int i = degree(); i >= 0; --i) {
          acc = acc * pp + c_[i] * qp;
          qp *= q;
        }
        if (acc == 0) return true;
      }
    }
  return false;
}

std::vector<DyadicInt> sqrt_2adic(const mpz_class& D, unsigned k) {
  if (D == 0) return {DyadicInt(0, k)};
  unsigned v = v2(D);
  if (v % 2 != 0) return {};
  unsigned m = v / 2;
  mpz_class d;
  mpz_tdiv_q_2exp(d.get_mpz_t(), D.get_mpz_t(), v);
  if (mod2k(d, 3) != 1) return {};
  if (m >= k) return {DyadicInt(0, k)};
  mpz_class y = sqrt_odd(d, k - m);
  DyadicInt r1(y << m, k), r2(-(y << m), k);
  if (r1 == r2) return {r1};
  return {r1, r2};
}

DyadicInt hensel_lift_simple(const IntPoly& h, int a0, unsigned k) {
  if (a0 != 0 && a0 != 1) fail(errc::invalid_argument, "starting parity must be 0 or 1");
  if (k == 0) return DyadicInt(0, 0);
  IntPoly hp = h.degree() >= 1 ? h.derivative() : IntPoly(std::vector<mpz_class>{1});
  if (h.degree() < 1 || mpz_odd_p(h.eval(a0).get_mpz_t()) ||
      mpz_even_p(hp.eval(a0).get_mpz_t()))
    fail(errc::not_a_simple_root,
         "need h(a0) even and h'(a0) odd at a0=" + std::to_string(a0));
  mpz_class r = a0;
  unsigned p = 1;
  while (p < k) {
    p = std::min(2 * p, k);
    mpz_class u = inv_mod2k(eval_mod(hp, r, p), p);
    r = mod2k(r - eval_mod(h, r, p) * u, p);
  }
  return DyadicInt(r, k);
}

const char* z2_case_name(z2_case c) {
  switch (c) {
    case z2_case::constant: return "Constant";
    case z2_case::linear: return "Linear";
    case z2_case::case_1_1: return "Case 1.1";
    case z2_case::case_1_2: return "Case 1.2";
    case z2_case::case_2_1_1: return "Case 2.1.1";
    case z2_case::case_2_1_2: return "Case 2.1.2";
    case z2_case::case_2_2: return "Case 2.2";
    case z2_case::general: return "General (lifting tree)";
  }
  return "?";
}

namespace {

void sort_dedup(std::vector<DyadicInt>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const DyadicInt& a, const DyadicInt& b) { return lex_less(a, b); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

// Refine a certified branch to k bits with Newton steps. Precondition:
// v2(h(r)) >= max(j, 2t+1) with t = v2(h'(r)) < j.
mpz_class newton_certified(const IntPoly& h, const IntPoly& hp, mpz_class r,
                           unsigned k) {
  for (;;) {
    mpz_class hr = h.eval(r);
    mpz_class hpr = hp.eval(r);
    unsigned t = v2(hpr);
    if (hr == 0 || v2(hr) >= k + t) return mod2k(r, k);
    unsigned w = k + 2 * t + 4;
    mpz_class u = inv_mod2k(mod2k(hpr >> t, w), w);
    r = mod2k(r - mod2k(hr >> t, w) * u, w);
  }
}

Z2Roots roots_general(const IntPoly& h, unsigned k) {
  Z2Roots out;
  out.label = z2_case::general;
  IntPoly hp = h.derivative();
  const unsigned K = k + 16;
  const size_t cap = 8 * static_cast<size_t>(h.degree());
  std::vector<DyadicInt> roots;
  std::vector<mpz_class> nodes;
  for (int r0 : {0, 1})
    if (mpz_even_p(h.eval(r0).get_mpz_t())) nodes.push_back(r0);
  for (unsigned j = 1; j < K && !nodes.empty(); ++j) {
    std::vector<mpz_class> next;
    for (const auto& r : nodes) {
      mpz_class hr = h.eval(r), hpr = hp.eval(r);
      unsigned s = v2(hr), t = v2(hpr);
      if (t != kInfVal && t < j && (s == kInfVal || s >= std::max(j, 2 * t + 1))) {
        roots.emplace_back(newton_certified(h, hp, r, k), k);
        continue;
      }
      for (int up : {0, 1}) {
        mpz_class c = r + (mpz_class(up) << j);
        if (v2(h.eval(c)) >= j + 1) next.push_back(c);
      }
    }
    if (next.size() > cap)
      fail(errc::lifting_tree_overflow,
           "residue tree width " + std::to_string(next.size()) + " exceeds " +
               std::to_string(cap));
    nodes = std::move(next);
  }
  for (const auto& r : nodes) roots.emplace_back(r, k);
  sort_dedup(roots);
  out.roots = std::move(roots);
  return out;
}

} // namespace

Z2Roots roots_z2(const IntPoly& h_in, unsigned k) {
  IntPoly h = h_in.primitive_part();
  Z2Roots out;
  const int d = h.degree();
  if (d == 0) {
    out.label = z2_case::constant;
    return out;
  }
  if (d == 1) {
    out.label = z2_case::linear;
    mpz_class a = h.coeff(1), b = h.coeff(0);
    if (mpz_odd_p(a.get_mpz_t()))
      out.roots.emplace_back(-b * inv_mod2k(a, std::max(k, 1u)), k);
    else
      out.nonintegral_roots = 1;
    return out;
  }
  if (d > 2) return roots_general(h, k);

  mpz_class a = h.coeff(2), b = h.coeff(1), c = h.coeff(0);
  bool ao = mpz_odd_p(a.get_mpz_t()), bo = mpz_odd_p(b.get_mpz_t()),
       co = mpz_odd_p(c.get_mpz_t());
  if (!bo) {
    if (!ao) {
      out.label = z2_case::case_1_2; // c odd by primitivity: no roots
      return out;
    }
    out.label = z2_case::case_1_1;
    mpz_class disc = b * b - 4 * a * c;
    mpz_class half_b = -(b >> 1); // b even, exact
    mpz_class ainv = inv_mod2k(a, std::max(k, 1u));
    if (disc == 0) {
      out.roots.emplace_back(half_b * ainv, k);
      return out;
    }
    unsigned v = v2(disc);
    if (v % 2 != 0) return out;
    unsigned m = v / 2; // >= 1 since 4 | disc
    mpz_class D;
    mpz_tdiv_q_2exp(D.get_mpz_t(), disc.get_mpz_t(), v);
    if (mod2k(D, 3) != 1) return out;
    mpz_class half_root = 0;
    if (m - 1 < k) half_root = sqrt_odd(D, k - (m - 1)) << (m - 1);
    out.roots.emplace_back((half_b + half_root) * ainv, k);
    DyadicInt other((half_b - half_root) * ainv, k);
    if (!(other == out.roots[0])) out.roots.push_back(other);
    sort_dedup(out.roots);
    return out;
  }
  if (ao) {
    if (co) {
      out.label = z2_case::case_2_1_1;
      return out;
    }
    out.label = z2_case::case_2_1_2;
    out.roots = {hensel_lift_simple(h, 0, k), hensel_lift_simple(h, 1, k)};
    sort_dedup(out.roots);
    return out;
  }
  out.label = z2_case::case_2_2;
  out.nonintegral_roots = 1;
  out.roots = {hensel_lift_simple(h, co ? 1 : 0, k)};
  return out;
}

DyadicInt rational_expand(const mpz_class& f, const mpz_class& q, unsigned k) {
  mpz_class ff = f, qq = q;
  if (qq < 0) {
    qq = -qq;
    ff = -ff;
  }
  if (mpz_even_p(qq.get_mpz_t()))
    fail(errc::even_denominator, "denominator must be odd");
  return DyadicInt(ff * inv_mod2k(qq, std::max(k, 1u)), k);
}

DyadicInt eval_mod2k(const IntPoly& h, const DyadicInt& x) {
  return DyadicInt(eval_mod(h, x.value(), std::max(x.precision(), 1u)),
                   x.precision());
}

std::string to_bit_string(const DyadicInt& x) {
  std::string s;
  s.reserve(x.precision());
  for (unsigned i = 0; i < x.precision(); ++i)
    s.push_back(mpz_tstbit(x.value().get_mpz_t(), i) ? '1' : '0');
  return s;
}

std::string to_sparse(const DyadicInt& x) {
  if (x.value() == 0) return "0";
  std::string s;
  for (unsigned i = 0; i < x.precision(); ++i) {
    if (!mpz_tstbit(x.value().get_mpz_t(), i)) continue;
    if (!s.empty()) s += " + ";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "2";
    else
      s += "2^" + std::to_string(i);
  }
  return s;
}

DyadicInt parse_dyadic(std::string_view text, unsigned precision) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail(errc::parse_error, "empty 2-adic literal");
  if (t.find_first_not_of("01") == std::string::npos) {
    mpz_class v = 0;
    for (size_t i = 0; i < t.size(); ++i)
      if (t[i] == '1') mpz_setbit(v.get_mpz_t(), i);
    return DyadicInt(v, precision ? precision : static_cast<unsigned>(t.size()));
  }
  // sparse form: terms "1", "2", "2^i" joined by '+'
  mpz_class v = 0;
  unsigned max_exp = 0;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t e = t.find('+', pos);
    std::string term = t.substr(pos, e == std::string::npos ? e : e - pos);
    unsigned exp;
    if (term == "0" && v == 0 && e == std::string::npos && pos == 0) {
      return DyadicInt(0, precision ? precision : 1);
    } else if (term == "1") {
      exp = 0;
    } else if (term == "2") {
      exp = 1;
    } else if (term.rfind("2^", 0) == 0 && term.size() > 2 &&
               term.find_first_not_of("0123456789", 2) == std::string::npos) {
      exp = static_cast<unsigned>(std::stoul(term.substr(2)));
    } else {
      fail(errc::parse_error, "bad 2-adic term '" + term + "'");
    }
    mpz_setbit(v.get_mpz_t(), exp);
    max_exp = std::max(max_exp, exp);
    if (e == std::string::npos) break;
    pos = e + 1;
  }
  return DyadicInt(v, precision ? precision : max_exp + 1);
}

namespace {

[[noreturn]] void bad_poly(std::string_view text) {
  fail(errc::parse_error, "cannot parse polynomial '" + std::string(text) + "'");
}

} // namespace

IntPoly IntPoly::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) bad_poly(text);
  std::vector<mpz_class> coeffs;
  size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      bad_poly(text);
    }
    first = false;
    std::string digits;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
      digits.push_back(t[i++]);
    if (i < t.size() && t[i] == '*') {
      if (digits.empty()) bad_poly(text);
      ++i;
    }
    unsigned exp = 0;
    if (i < t.size() && (t[i] == 'Y' || t[i] == 'y')) {
      ++i;
      exp = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::string ed;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
          ed.push_back(t[i++]);
        if (ed.empty()) bad_poly(text);
        exp = static_cast<unsigned>(std::stoul(ed));
      }
    } else if (digits.empty()) {
      bad_poly(text);
    }
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
    coeffs[exp] += sign * c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) bad_poly(text);
  return IntPoly(std::move(coeffs));
}

std::string IntPoly::str() const {
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    mpz_class c = c_[i];
    if (c == 0 && degree() > 0) continue;
    std::string mag = mpz_class(abs(c)).get_str();
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != "1") s += mag;
    if (i >= 1) {
      s += "Y";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::even_unit: return "EvenUnit";
    case errc::not_a_simple_root: return "NotASimpleRoot";
    case errc::lifting_tree_overflow: return "LiftingTreeOverflow";
    case errc::even_denominator: return "EvenDenominator";
    case errc::non_unit: return "NonUnit";
    case errc::not_liftable: return "NotLiftable";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::prefix_too_long: return "PrefixTooLong";
    case errc::malformed_file: return "MalformedFile";
    case errc::degree_too_low: return "DegreeTooLow";
    case errc::rational_root: return "RationalRoot";
    case errc::no_root: return "NoRoot";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

} // namespace adic2
