#pragma once

#include <stdexcept>
#include <string>

namespace adic2 {

enum class errc {
  even_unit,             // inversion of an even 2-adic value
  not_a_simple_root,     // Hensel precondition failed (h(a0) or h'(a0) parity)
  lifting_tree_overflow, // candidate residue set exceeded the width cap
  even_denominator,      // rational expansion with even q
  non_unit,              // series inversion with zero constant term
  not_liftable,          // series Hensel precondition failed
  precision_exhausted,   // series root recursion ran out of terms
  prefix_too_long,       // brute-force complexity beyond the cost guard
  malformed_file,        // bitstring file contains foreign characters
  degree_too_low,        // bound check needs degree >= 2
  rational_root,         // bound check given a polynomial with a rational root
  no_root,               // requested root index does not exist
  parse_error,           // unreadable polynomial/series/number text
  invalid_argument,
  io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

} // namespace adic2
