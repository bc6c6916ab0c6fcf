#include "adic2/seqgen.hpp"

#include <fstream>
#include <sstream>

namespace adic2 {

BitString gen_thue_morse(unsigned n) {
  BitString t(n, 0);
  for (unsigned i = 1; i < n; ++i)
    t[i] = (i % 2 == 0) ? t[i / 2] : static_cast<std::uint8_t>(1 - t[i / 2]);
  return t;
}

BitString dual(BitString s) {
  for (auto& b : s) b = static_cast<std::uint8_t>(1 - (b & 1));
  return s;
}

BitString from_dyadic(const DyadicInt& x) {
  BitString s(x.precision());
  for (unsigned i = 0; i < x.precision(); ++i)
    s[i] = static_cast<std::uint8_t>(x.bit(i));
  return s;
}

DyadicInt to_dyadic(const BitString& s) {
  mpz_class v = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] & 1) mpz_setbit(v.get_mpz_t(), i);
  return DyadicInt(v, static_cast<unsigned>(s.size()));
}

BitString from_series(const F2Series& s) { return s.bits(); }

F2Series to_series(const BitString& s) {
  BitString b = s;
  return F2Series(std::move(b));
}

FcsrState::FcsrState(std::vector<std::uint8_t> taps_,
                     std::vector<std::uint8_t> reg_, mpz_class carry_)
    : taps(std::move(taps_)), reg(std::move(reg_)), carry(std::move(carry_)) {
  if (taps.empty() || taps.size() != reg.size())
    fail(errc::invalid_argument, "register and taps must have equal nonzero length");
  for (auto b : taps)
    if (b > 1) fail(errc::invalid_argument, "taps must be bits");
  for (auto b : reg)
    if (b > 1) fail(errc::invalid_argument, "register cells must be bits");
  if (carry < 0) fail(errc::invalid_argument, "carry must be nonnegative");
}

std::pair<FcsrState, int> fcsr_step(const FcsrState& st) {
  mpz_class sigma = st.carry;
  for (size_t j = 0; j < st.taps.size(); ++j)
    if (st.taps[j] && st.reg[j]) sigma += 1;
  int out = st.reg[0];
  FcsrState next = st;
  next.reg.erase(next.reg.begin());
  next.reg.push_back(static_cast<std::uint8_t>(mpz_tstbit(sigma.get_mpz_t(), 0)));
  next.carry = sigma >> 1;
  return {std::move(next), out};
}

BitString fcsr_run(FcsrState st, unsigned n) {
  BitString out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    auto [next, bit] = fcsr_step(st);
    out.push_back(static_cast<std::uint8_t>(bit));
    st = std::move(next);
  }
  return out;
}

mpz_class fcsr_connection(const FcsrState& st) {
  size_t L = st.taps.size();
  mpz_class q = -1;
  for (size_t j = 0; j < L; ++j)
    if (st.taps[j]) q += mpz_class(1) << (L - j);
  return q;
}

std::pair<mpz_class, mpz_class> fcsr_fraction(const FcsrState& st) {
  // With lag coefficients q_i = a_{L-i} (and q_0 = -1), the stream value is
  //   ( sum_{n<L} 2^n sum_{i<=n} q_i s_{n-i}  -  carry * 2^L ) / q.
  size_t L = st.taps.size();
  mpz_class f = 0;
  for (size_t n = 0; n < L; ++n) {
    mpz_class inner = -mpz_class(st.reg[n]);
    for (size_t i = 1; i <= n; ++i)
      if (st.taps[L - i] && st.reg[n - i]) inner += 1;
    f += inner << n;
  }
  f -= st.carry << L;
  mpz_class q = fcsr_connection(st);
  if (q < 0) {
    q = -q;
    f = -f;
  }
  return {std::move(f), std::move(q)};
}

BitString parse_bits(std::string_view text) {
  BitString out;
  for (char ch : text) {
    if (ch == '0' || ch == '1')
      out.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (ch != '\n' && ch != ' ')
      fail(errc::malformed_file,
           std::string("unexpected character '") + ch + "' in bit stream");
  }
  return out;
}

std::string format_bits(const BitString& s) {
  std::string out;
  out.reserve(s.size() + s.size() / 64 + 2);
  for (size_t i = 0; i < s.size(); ++i) {
    out += static_cast<char>('0' + (s[i] & 1));
    if ((i + 1) % 64 == 0) out += '\n';
  }
  if (out.empty() || out.back() != '\n') out += '\n';
  return out;
}

BitString load_bits(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bits(buf.str());
}

void store_bits(const std::string& path, const BitString& s) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open " + path);
  out << format_bits(s);
  if (!out) fail(errc::io_error, "write failed for " + path);
}

std::string bits_to_line(const BitString& s) {
  std::string out;
  out.reserve(s.size());
  for (auto b : s) out += static_cast<char>('0' + (b & 1));
  return out;
}

} // namespace adic2
