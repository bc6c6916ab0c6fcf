#include "adic2/fps2.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace adic2 {

namespace {

using Bits = std::vector<std::uint8_t>;

Bits trim(Bits v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Bits vxor(const Bits& a, const Bits& b) {
  Bits r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : 0) ^ (i < b.size() ? b[i] : 0);
  return r;
}

Bits vmul(const Bits& a, const Bits& b) {
  if (a.empty() || b.empty()) return {};
  Bits r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
  }
  return r;
}

Bits vcut(Bits v, size_t n) {
  if (v.size() > n) v.resize(n);
  return v;
}

Bits vpad(Bits v, size_t n) {
  v.resize(n, 0);
  return v;
}

// 1 / a mod X^n by Newton doubling; requires a[0] = 1.
Bits series_inv(const Bits& a, size_t n) {
  if (n == 0) return {};
  Bits y{1};
  size_t p = 1;
  while (p < n) {
    p = std::min(2 * p, n);
    Bits e = vpad(vcut(vmul(vcut(a, p), y), p), p);
    e[0] ^= 1; // e = a*y + 1, divisible by X^(p/2)
    y = vcut(vxor(y, vmul(y, e)), p);
  }
  return vpad(std::move(y), n);
}

} // namespace

F2Poly::F2Poly(Bits bits) : c_(trim(std::move(bits))) {}

F2Poly F2Poly::one() { return F2Poly(Bits{1}); }

F2Poly F2Poly::x_pow(unsigned e) {
  Bits b(e + 1, 0);
  b[e] = 1;
  return F2Poly(std::move(b));
}

int F2Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return -1;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
  return F2Poly(vxor(c_, o.c_));
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
  return F2Poly(vmul(c_, o.c_));
}

F2Poly F2Poly::shifted_up(unsigned t) const {
  if (is_zero()) return {};
  Bits r(c_.size() + t, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + t);
  return F2Poly(std::move(r));
}

F2Poly F2Poly::shifted_down(unsigned t) const {
  if (is_zero()) return {};
  if (valuation() < static_cast<int>(t))
    fail(errc::invalid_argument, "shifted_down: valuation below shift");
  return F2Poly(Bits(c_.begin() + t, c_.end()));
}

F2Poly F2Poly::pow(unsigned e) const {
  F2Poly r = one();
  F2Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool F2Poly::is_square() const {
  for (size_t i = 1; i < c_.size(); i += 2)
    if (c_[i]) return false;
  return true;
}

F2Poly F2Poly::sqrt() const {
  if (!is_square()) fail(errc::invalid_argument, "sqrt of a non-square polynomial");
  Bits r((c_.size() + 1) / 2, 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = c_[2 * i];
  return F2Poly(std::move(r));
}

std::string F2Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "X";
    else
      out += "X^" + std::to_string(i);
  }
  return out;
}

namespace {

// remainder of a mod b, b != 0
Bits vmod(Bits a, const Bits& b) {
  a = trim(std::move(a));
  while (a.size() >= b.size()) {
    size_t k = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[k + j] ^= b[j];
    a = trim(std::move(a));
  }
  return a;
}

Bits vdiv_exact(Bits a, const Bits& b) {
  a = trim(std::move(a));
  if (a.empty()) return {};
  Bits q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    size_t k = a.size() - b.size();
    q[k] = 1;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] ^= b[j];
    a = trim(std::move(a));
  }
  if (!a.empty()) fail(errc::invalid_argument, "inexact polynomial division");
  return q;
}

} // namespace

F2Poly gcd(F2Poly a, F2Poly b) {
  Bits x = a.c_, y = b.c_;
  while (!y.empty()) {
    Bits r = vmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return F2Poly(std::move(x));
}

F2Series::F2Series(Bits bits) : c_(std::move(bits)) {
  for (auto& b : c_) b &= 1;
}

F2Series F2Series::from_poly(const F2Poly& p, unsigned precision) {
  return F2Series(vpad(vcut(p.bits(), precision), precision));
}

int F2Series::coeff(unsigned i) const {
  if (i >= c_.size()) fail(errc::invalid_argument, "series coefficient beyond precision");
  return c_[i];
}

F2Series F2Series::truncated(unsigned precision) const {
  if (precision > c_.size())
    fail(errc::invalid_argument, "cannot extend series precision by truncation");
  return F2Series(vcut(c_, precision));
}

bool lex_less(const F2Series& a, const F2Series& b) {
  const auto& u = a.bits();
  const auto& v = b.bits();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

F2Series ps_add(const F2Series& x, const F2Series& y) {
  size_t p = std::min(x.precision(), y.precision());
  return F2Series(vcut(vxor(x.bits(), y.bits()), p));
}

F2Series ps_mul(const F2Series& x, const F2Series& y) {
  size_t p = std::min(x.precision(), y.precision());
  return F2Series(vpad(vcut(vmul(vcut(x.bits(), p), vcut(y.bits(), p)), p), p));
}

F2Series ps_inv(const F2Series& x) {
  if (x.precision() == 0 || !x.bits()[0])
    fail(errc::non_unit, "series inverse requires a unit constant term");
  return F2Series(series_inv(x.bits(), x.precision()));
}

std::optional<F2Series> ps_sqrt(const F2Series& x) {
  const auto& b = x.bits();
  for (size_t i = 1; i < b.size(); i += 2)
    if (b[i]) return std::nullopt;
  Bits r((b.size() + 1) / 2, 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = b[2 * i];
  return F2Series(std::move(r));
}

F2YQuad::F2YQuad(F2Poly a_, F2Poly b_, F2Poly c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    fail(errc::invalid_argument, "all three coefficients are zero");
  F2Poly g = gcd(gcd(a, b), c);
  if (g.degree() != 0)
    fail(errc::invalid_argument, "coefficients must have trivial common factor");
}

F2YQuad F2YQuad::reduced(F2Poly a, F2Poly b, F2Poly c) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    fail(errc::invalid_argument, "all three coefficients are zero");
  F2Poly g = gcd(gcd(a, b), c);
  auto dv = [&](const F2Poly& p) {
    return p.is_zero() ? F2Poly() : F2Poly(vdiv_exact(p.bits(), g.bits()));
  };
  return F2YQuad(dv(a), dv(b), dv(c));
}

std::string F2YQuad::str() const {
  auto coef = [](const F2Poly& p) {
    size_t terms = 0;
    for (auto b : p.bits()) terms += b;
    if (p.degree() == 0) return std::string();
    std::string s = p.str();
    return terms > 1 ? "(" + s + ") " : s + " ";
  };
  std::string out;
  if (!a.is_zero()) out += coef(a) + "Y^2";
  if (!b.is_zero()) {
    if (!out.empty()) out += " + ";
    out += coef(b) + "Y";
  }
  if (!c.is_zero() || out.empty()) {
    if (!out.empty()) out += " + ";
    out += c.str();
  }
  return out;
}

namespace {

F2Series lift_series(const F2Poly& a, const F2Poly& b, const F2Poly& c,
                     int a0, unsigned prec) {
  a0 &= 1;
  if (b.coeff(0) != 1)
    fail(errc::not_liftable, "derivative b(X) is not a unit");
  int r0 = (a0 ? a.coeff(0) ^ b.coeff(0) : 0) ^ c.coeff(0);
  if (r0 != 0)
    fail(errc::not_liftable, "constant term does not solve h modulo X");
  if (prec == 0) return F2Series(Bits{});

  // e tracks h(alpha) mod X^prec; setting bit n of alpha adds
  // b*X^n + a*X^(2n), which flips e at position n and leaves lower
  // positions untouched.
  Bits e = vpad(
      vcut(a0 ? vxor(vxor(a.bits(), b.bits()), c.bits()) : c.bits(), prec),
      prec);
  Bits alpha(prec, 0);
  alpha[0] = static_cast<std::uint8_t>(a0);
  for (unsigned n = 1; n < prec; ++n) {
    if (!e[n]) continue;
    alpha[n] = 1;
    for (size_t j = 0; j < b.bits().size() && n + j < prec; ++j)
      e[n + j] ^= b.bits()[j];
    for (size_t j = 0; j < a.bits().size() && 2 * n + j < prec; ++j)
      e[2 * n + j] ^= a.bits()[j];
  }
  return F2Series(std::move(alpha));
}

} // namespace

F2Series hensel_lift_series(const F2YQuad& h, int a0, unsigned prec) {
  return lift_series(h.a, h.b, h.c, a0, prec);
}

namespace {

F2Series with_offset(const F2Poly& head, unsigned t, const F2Series& tail,
                     unsigned prec) {
  Bits r = vpad(vcut(head.bits(), prec), prec);
  for (size_t j = 0; j < tail.bits().size() && t + j < prec; ++j)
    r[t + j] ^= tail.bits()[j];
  return F2Series(std::move(r));
}

SeriesRoots dispatch(const F2Poly& a, const F2Poly& b, const F2Poly& c,
                     unsigned prec) {
  int a0 = a.coeff(0), b0 = b.coeff(0), c0 = c.coeff(0);
  SeriesRoots out;

  if (b0 == 1) {
    if (a0 == 0 || c0 == 0) {
      if (a0 == 1 && c0 == 0) {
        out.label = "Case 4";
        out.roots.push_back(lift_series(a, b, c, 0, prec));
        out.roots.push_back(lift_series(a, b, c, 1, prec));
      } else {
        out.label = "Case 3";
        out.roots.push_back(lift_series(a, b, c, c0, prec));
        out.nonintegral_roots = a.is_zero() ? 0 : 1;
      }
    } else {
      out.label = "Case 2"; // (1,1,1): no constant term works mod X
    }
    return out;
  }

  if (a0 == 0) {
    // gcd = 1 forces c0 = 1 here: triple (0,0,1)
    out.label = "Case 2";
    return out;
  }

  if (b.is_zero()) {
    out.label = "Case 5.2";
    if (a.is_square() && c.is_square()) {
      // Y^2 = c/a has the exact solution sqrt(c)/sqrt(a)
      if (prec == 0) {
        out.roots.push_back(F2Series(Bits{}));
      } else {
        F2Series num = F2Series::from_poly(c.sqrt(), prec);
        F2Series den = F2Series::from_poly(a.sqrt(), prec);
        out.roots.push_back(ps_mul(num, ps_inv(den)));
      }
    }
    return out;
  }

  // Case 5.1: a(0) = 1, b nonzero with b(0) = 0. Any root is congruent
  // mod X^m to a square root d1 of c/a, where m = v(b). Substituting
  // Y = X^t Z + d1 with t = min(m, v(h(d1))/2) reduces to a smaller
  // instance of the same dispatch.
  unsigned m = static_cast<unsigned>(b.valuation());
  F2Poly s(vcut(vmul(vcut(c.bits(), m), series_inv(a.bits(), m)), m));
  if (!s.is_square()) {
    out.label = "Case 5.1 (no square root modulo X^m)";
    return out;
  }
  F2Poly d1 = s.sqrt();
  F2Poly rem = a * d1 * d1 + b * d1 + c; // h(d1), valuation >= m
  unsigned t = m;
  if (!rem.is_zero()) {
    unsigned e = static_cast<unsigned>(rem.valuation());
    if (e < 2 * m) {
      if (e % 2 == 1) {
        // h(d1) = X^e * unit with e odd: no power series solution, same
        // verdict as the unit-constant-term triple.
        out.label = "Case 5.1 -> Case 2";
        return out;
      }
      t = e / 2;
    }
  }
  SeriesRoots sub = dispatch(a, b.shifted_down(t),
                             rem.is_zero() ? F2Poly() : rem.shifted_down(2 * t),
                             prec > t ? prec - t : 0);
  out.label = "Case 5.1 -> " + sub.label;
  out.nonintegral_roots = sub.nonintegral_roots;
  for (const auto& z : sub.roots)
    out.roots.push_back(with_offset(d1, t, z, prec));
  return out;
}

} // namespace

SeriesRoots roots_f2series(const F2YQuad& h, unsigned prec) {
  SeriesRoots r = dispatch(h.a, h.b, h.c, prec);
  std::sort(r.roots.begin(), r.roots.end(), lex_less);
  return r;
}

F2Series eval_quad(const F2YQuad& h, const F2Series& y) {
  unsigned p = y.precision();
  F2Series r = ps_mul(ps_mul(F2Series::from_poly(h.a, p), y), y);
  r = ps_add(r, ps_mul(F2Series::from_poly(h.b, p), y));
  return ps_add(r, F2Series::from_poly(h.c, p));
}

std::string to_bit_string(const F2Series& s) {
  std::string out;
  out.reserve(s.precision());
  for (auto b : s.bits()) out += static_cast<char>('0' + b);
  return out;
}

std::string to_sparse(const F2Series& s) {
  return F2Poly(s.bits()).str();
}

namespace {

bool bit_chars_only(std::string_view t) {
  if (t.empty()) return false;
  for (char ch : t)
    if (ch != '0' && ch != '1') return false;
  return true;
}

std::string strip_spaces(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  return t;
}

unsigned parse_uint(const std::string& t, size_t& i) {
  if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
    fail(errc::parse_error, "expected an exponent");
  unsigned long v = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    v = v * 10 + static_cast<unsigned long>(t[i] - '0');
    if (v > 1000000) fail(errc::parse_error, "exponent too large");
    ++i;
  }
  return static_cast<unsigned>(v);
}

} // namespace

F2Poly F2Poly::parse(std::string_view text) {
  std::string t = strip_spaces(text);
  if (t.empty()) fail(errc::parse_error, "empty polynomial");
  if (bit_chars_only(t)) {
    Bits b(t.size());
    for (size_t i = 0; i < t.size(); ++i) b[i] = static_cast<std::uint8_t>(t[i] - '0');
    return F2Poly(std::move(b));
  }
  Bits acc;
  size_t i = 0;
  while (i < t.size()) {
    if (t[i] == '+' || t[i] == '-') {
      ++i;
      if (i >= t.size()) fail(errc::parse_error, "trailing sign");
      continue;
    }
    unsigned e = 0;
    if (t[i] == '1') {
      ++i;
    } else if (t[i] == '0') {
      ++i;
      continue;
    } else if (t[i] == 'X' || t[i] == 'x') {
      ++i;
      e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        e = parse_uint(t, i);
      }
    } else {
      fail(errc::parse_error, std::string("unexpected character '") + t[i] + "'");
    }
    if (acc.size() < e + 1) acc.resize(e + 1, 0);
    acc[e] ^= 1;
    if (i < t.size() && t[i] != '+' && t[i] != '-')
      fail(errc::parse_error, "expected '+' between terms");
  }
  return F2Poly(std::move(acc));
}

namespace {

// Y-polynomials of degree <= 2 with F2[X] coefficients, for parsing
// expressions like "(X+1)^3 Y^2 + (X+1)^2 Y + X".
struct YPoly {
  std::array<F2Poly, 3> c;
};

YPoly yconst(F2Poly p) { return YPoly{{std::move(p), {}, {}}}; }

YPoly yadd(const YPoly& u, const YPoly& v) {
  return YPoly{{u.c[0] + v.c[0], u.c[1] + v.c[1], u.c[2] + v.c[2]}};
}

YPoly ymul(const YPoly& u, const YPoly& v) {
  YPoly r;
  for (int i = 0; i < 3; ++i) {
    if (u.c[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (v.c[j].is_zero()) continue;
      if (i + j > 2) fail(errc::parse_error, "degree in Y exceeds 2");
      r.c[i + j] = r.c[i + j] + u.c[i] * v.c[j];
    }
  }
  return r;
}

YPoly ypow(YPoly base, unsigned e) {
  if (e > 4096) fail(errc::parse_error, "exponent too large");
  YPoly r = yconst(F2Poly::one());
  while (e) {
    if (e & 1) r = ymul(r, base);
    e >>= 1;
    if (e) base = ymul(base, base);
  }
  return r;
}

struct QParser {
  const std::string& t;
  size_t i = 0;

  char peek() const { return i < t.size() ? t[i] : '\0'; }

  YPoly sum() {
    YPoly r = term();
    while (peek() == '+' || peek() == '-') {
      ++i;
      r = yadd(r, term());
    }
    return r;
  }

  YPoly term() {
    YPoly r = factor();
    for (;;) {
      char ch = peek();
      if (ch == '*') {
        ++i;
        r = ymul(r, factor());
      } else if (ch == '(' || ch == 'X' || ch == 'x' || ch == 'Y' ||
                 ch == 'y' || std::isdigit(static_cast<unsigned char>(ch))) {
        r = ymul(r, factor());
      } else {
        return r;
      }
    }
  }

  YPoly factor() {
    char ch = peek();
    if (ch == '(') {
      ++i;
      YPoly inner = sum();
      if (peek() != ')') fail(errc::parse_error, "missing ')'");
      ++i;
      return maybe_pow(std::move(inner));
    }
    if (ch == 'X' || ch == 'x') {
      ++i;
      unsigned e = 1;
      if (peek() == '^') {
        ++i;
        e = parse_uint(t, i);
      }
      return yconst(F2Poly::x_pow(e));
    }
    if (ch == 'Y' || ch == 'y') {
      ++i;
      unsigned e = 1;
      if (peek() == '^') {
        ++i;
        e = parse_uint(t, i);
      }
      if (e > 2) fail(errc::parse_error, "degree in Y exceeds 2");
      YPoly r;
      r.c[e] = F2Poly::one();
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      unsigned v = parse_uint(t, i);
      if (v > 1) fail(errc::parse_error, "integer coefficients are 0 or 1");
      return yconst(v ? F2Poly::one() : F2Poly());
    }
    fail(errc::parse_error, std::string("unexpected character '") + ch + "'");
  }

  YPoly maybe_pow(YPoly base) {
    if (peek() == '^') {
      ++i;
      unsigned e = parse_uint(t, i);
      return ypow(std::move(base), e);
    }
    return base;
  }
};

} // namespace

F2YQuad F2YQuad::parse(std::string_view text) {
  std::string t = strip_spaces(text);
  if (t.empty()) fail(errc::parse_error, "empty polynomial");
  if (t.find('=') != std::string::npos) {
    F2Poly parts[3];
    bool seen[3] = {false, false, false};
    size_t pos = 0;
    while (pos < t.size()) {
      size_t end = t.find(';', pos);
      if (end == std::string::npos) end = t.size();
      std::string item = t.substr(pos, end - pos);
      pos = end + 1;
      if (item.empty()) continue;
      if (item.size() < 2 || item[1] != '=')
        fail(errc::parse_error, "expected a=...;b=...;c=...");
      int k = item[0] == 'a' ? 0 : item[0] == 'b' ? 1 : item[0] == 'c' ? 2 : -1;
      if (k < 0) fail(errc::parse_error, "coefficient keys are a, b, c");
      if (seen[k]) fail(errc::parse_error, "duplicate coefficient key");
      seen[k] = true;
      parts[k] = F2Poly::parse(item.substr(2));
    }
    return reduced(parts[0], parts[1], parts[2]);
  }
  QParser p{t};
  YPoly r = p.sum();
  if (p.i != t.size()) fail(errc::parse_error, "trailing characters");
  return reduced(r.c[2], r.c[1], r.c[0]);
}

F2Series parse_series(std::string_view text, unsigned precision) {
  std::string t = strip_spaces(text);
  if (bit_chars_only(t)) {
    Bits b(t.size());
    for (size_t i = 0; i < t.size(); ++i) b[i] = static_cast<std::uint8_t>(t[i] - '0');
    if (precision) b = vpad(vcut(std::move(b), precision), precision);
    return F2Series(std::move(b));
  }
  F2Poly p = F2Poly::parse(text);
  unsigned n = precision ? precision
                         : static_cast<unsigned>(std::max(p.degree() + 1, 1));
  if (p.degree() >= static_cast<int>(n))
    fail(errc::parse_error, "term exceeds requested precision");
  return F2Series::from_poly(p, n);
}

} // namespace adic2
