#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adic2/dyadic.hpp"
#include "adic2/fps2.hpp"

namespace adic2 {

// Bit n holds the coefficient of 2^n (dyadic view) or X^n (series view).
using BitString = std::vector<std::uint8_t>;

// t(0) = 0, t(2n) = t(n), t(2n+1) = 1 - t(n)
BitString gen_thue_morse(unsigned n);
BitString dual(BitString s);

BitString from_dyadic(const DyadicInt& x);
DyadicInt to_dyadic(const BitString& s); // precision = length
BitString from_series(const F2Series& s);
F2Series to_series(const BitString& s);

// Feedback-with-carry shift register. Cell order is oldest first: tap j
// weights the bit that entered j steps after the current output cell.
struct FcsrState {
  FcsrState(std::vector<std::uint8_t> taps, std::vector<std::uint8_t> reg,
            mpz_class carry);

  std::vector<std::uint8_t> taps; // a_0 .. a_{L-1}
  std::vector<std::uint8_t> reg;  // oldest bit first
  mpz_class carry;                // nonnegative
};

// One transition: sigma = sum_j a_j * reg[j] + carry; the register shifts
// in sigma mod 2, the carry becomes floor(sigma / 2), and the bit shifted
// out is the output.
std::pair<FcsrState, int> fcsr_step(const FcsrState& st);
BitString fcsr_run(FcsrState st, unsigned n);

// Connection integer q = sum_j a_j 2^(L-j) - 1 (always odd; -1 when no
// taps are set).
mpz_class fcsr_connection(const FcsrState& st);
// Exact value of the output stream as a fraction f/q with q > 0 odd.
std::pair<mpz_class, mpz_class> fcsr_fraction(const FcsrState& st);

// ASCII '0'/'1'; newline and space are ignored on input, anything else is
// errc::malformed_file. Output wraps lines at 64 bits.
BitString parse_bits(std::string_view text);
std::string format_bits(const BitString& s);
BitString load_bits(const std::string& path);
void store_bits(const std::string& path, const BitString& s);

std::string bits_to_line(const BitString& s); // unwrapped "0110..." form

} // namespace adic2
