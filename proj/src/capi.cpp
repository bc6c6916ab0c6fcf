#include "adic2.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "adic2/complexity.hpp"
#include "adic2/dyadic.hpp"
#include "adic2/error.hpp"
#include "adic2/fps2.hpp"
#include "adic2/seqgen.hpp"
#include "adic2/verify.hpp"

struct adic2_bits {
  adic2::BitString v;
};

struct adic2_roots {
  unsigned prec = 0;
  std::optional<adic2::IntPoly> hz;  // set for the 2-adic domain
  std::optional<adic2::F2YQuad> hx;  // set for the series domain
  adic2::Z2Roots zr;
  adic2::SeriesRoots sr;

  size_t count() const { return hz ? zr.roots.size() : sr.roots.size(); }
};

struct adic2_profile {
  adic2::ComplexityProfile p;
};

namespace {

thread_local std::string g_last_error;

adic2_status map_code(adic2::errc c) {
  using adic2::errc;
  switch (c) {
    case errc::even_unit: return ADIC2_ERR_EVEN_UNIT;
    case errc::not_a_simple_root: return ADIC2_ERR_NOT_A_SIMPLE_ROOT;
    case errc::lifting_tree_overflow: return ADIC2_ERR_LIFTING_TREE_OVERFLOW;
    case errc::even_denominator: return ADIC2_ERR_EVEN_DENOMINATOR;
    case errc::non_unit: return ADIC2_ERR_NON_UNIT;
    case errc::not_liftable: return ADIC2_ERR_NOT_LIFTABLE;
    case errc::precision_exhausted: return ADIC2_ERR_PRECISION_EXHAUSTED;
    case errc::prefix_too_long: return ADIC2_ERR_PREFIX_TOO_LONG;
    case errc::malformed_file: return ADIC2_ERR_MALFORMED_FILE;
    case errc::degree_too_low: return ADIC2_ERR_DEGREE_TOO_LOW;
    case errc::rational_root: return ADIC2_ERR_RATIONAL_ROOT;
    case errc::no_root: return ADIC2_ERR_NO_ROOT;
    case errc::parse_error: return ADIC2_ERR_PARSE;
    case errc::invalid_argument: return ADIC2_ERR_INVALID_ARGUMENT;
    case errc::io_error: return ADIC2_ERR_IO;
  }
  return ADIC2_ERR_UNKNOWN;
}

template <class F>
adic2_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ADIC2_OK;
  } catch (const adic2::error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ADIC2_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ADIC2_ERR_UNKNOWN;
  }
}

adic2_status fail_null(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return ADIC2_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

adic2_status give_string(const std::string& s, char** out) {
  char* d = dup_string(s);
  if (!d) {
    g_last_error = "out of memory";
    return ADIC2_ERR_UNKNOWN;
  }
  *out = d;
  return ADIC2_OK;
}

mpz_class parse_decimal(const char* text, const char* what) {
  try {
    return mpz_class(std::string(text));
  } catch (const std::invalid_argument&) {
    adic2::fail(adic2::errc::parse_error,
                std::string(what) + " is not a decimal integer: " + text);
  }
}

adic2::BitString parse_cells(const char* text, const char* what) {
  for (const char* p = text; *p; ++p)
    if (*p != '0' && *p != '1')
      adic2::fail(adic2::errc::parse_error,
                  std::string(what) + " must be a '0'/'1' string");
  return adic2::parse_bits(text);
}

} // namespace

extern "C" {

const char* adic2_version(void) { return "1.0.0"; }

const char* adic2_status_name(adic2_status st) {
  switch (st) {
    case ADIC2_OK: return "ok";
    case ADIC2_ERR_EVEN_UNIT: return "even-unit";
    case ADIC2_ERR_NOT_A_SIMPLE_ROOT: return "not-a-simple-root";
    case ADIC2_ERR_LIFTING_TREE_OVERFLOW: return "lifting-tree-overflow";
    case ADIC2_ERR_EVEN_DENOMINATOR: return "even-denominator";
    case ADIC2_ERR_NON_UNIT: return "non-unit";
    case ADIC2_ERR_NOT_LIFTABLE: return "not-liftable";
    case ADIC2_ERR_PRECISION_EXHAUSTED: return "precision-exhausted";
    case ADIC2_ERR_PREFIX_TOO_LONG: return "prefix-too-long";
    case ADIC2_ERR_MALFORMED_FILE: return "malformed-file";
    case ADIC2_ERR_DEGREE_TOO_LOW: return "degree-too-low";
    case ADIC2_ERR_RATIONAL_ROOT: return "rational-root";
    case ADIC2_ERR_NO_ROOT: return "no-root";
    case ADIC2_ERR_PARSE: return "parse-error";
    case ADIC2_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case ADIC2_ERR_IO: return "io-error";
    case ADIC2_ERR_VERIFY_FAILED: return "verify-failed";
    case ADIC2_ERR_UNKNOWN: return "unknown-error";
  }
  return "unknown-error";
}

const char* adic2_last_error(void) { return g_last_error.c_str(); }

void adic2_string_free(char* s) { std::free(s); }

void adic2_bits_free(adic2_bits* b) { delete b; }

size_t adic2_bits_len(const adic2_bits* b) { return b ? b->v.size() : 0; }

int adic2_bits_get(const adic2_bits* b, size_t i) {
  if (!b || i >= b->v.size()) return -1;
  return b->v[i] & 1;
}

adic2_status adic2_bits_line(const adic2_bits* b, char** out) {
  if (!b) return fail_null("bits");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (give_string(adic2::bits_to_line(b->v), out) != ADIC2_OK)
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
  });
}

adic2_status adic2_bits_format(const adic2_bits* b, char** out) {
  if (!b) return fail_null("bits");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (give_string(adic2::format_bits(b->v), out) != ADIC2_OK)
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
  });
}

adic2_status adic2_bits_parse(const char* text, adic2_bits** out) {
  if (!text) return fail_null("text");
  if (!out) return fail_null("out");
  return guarded([&] { *out = new adic2_bits{adic2::parse_bits(text)}; });
}

adic2_status adic2_bits_load(const char* path, adic2_bits** out) {
  if (!path) return fail_null("path");
  if (!out) return fail_null("out");
  return guarded([&] { *out = new adic2_bits{adic2::load_bits(path)}; });
}

adic2_status adic2_bits_store(const adic2_bits* b, const char* path) {
  if (!b) return fail_null("bits");
  if (!path) return fail_null("path");
  return guarded([&] { adic2::store_bits(path, b->v); });
}

adic2_status adic2_generate_preset(const char* name, unsigned n,
                                   adic2_bits** out) {
  if (!name) return fail_null("name");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (n < 1) adic2::fail(adic2::errc::invalid_argument, "n must be >= 1");
    std::string key = name;
    adic2::BitString v;
    if (key == "thue-morse") {
      v = adic2::gen_thue_morse(n);
    } else if (key == "thue-morse-dual") {
      v = adic2::dual(adic2::gen_thue_morse(n));
    } else if (key == "sqrt17" || key == "sqrt-7") {
      auto roots = adic2::sqrt_2adic(key == "sqrt17" ? 17 : -7, n);
      if (roots.empty())
        adic2::fail(adic2::errc::no_root, "no square root at this precision");
      v = adic2::from_dyadic(roots[0]);
    } else {
      adic2::fail(adic2::errc::invalid_argument,
                  "unknown preset '" + key +
                      "'; expected thue-morse, thue-morse-dual, sqrt17, or "
                      "sqrt-7");
    }
    *out = new adic2_bits{std::move(v)};
  });
}

adic2_status adic2_generate_rational(const char* f, const char* q, unsigned n,
                                     adic2_bits** out) {
  if (!f) return fail_null("f");
  if (!q) return fail_null("q");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (n < 1) adic2::fail(adic2::errc::invalid_argument, "n must be >= 1");
    mpz_class fv = parse_decimal(f, "numerator");
    mpz_class qv = parse_decimal(q, "denominator");
    *out = new adic2_bits{
        adic2::from_dyadic(adic2::rational_expand(fv, qv, n))};
  });
}

adic2_status adic2_generate_fcsr(const char* taps, const char* reg,
                                 const char* carry, unsigned n,
                                 adic2_bits** out) {
  if (!taps) return fail_null("taps");
  if (!reg) return fail_null("reg");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (n < 1) adic2::fail(adic2::errc::invalid_argument, "n must be >= 1");
    adic2::FcsrState st(parse_cells(taps, "taps"), parse_cells(reg, "reg"),
                        carry ? parse_decimal(carry, "carry") : mpz_class(0));
    *out = new adic2_bits{adic2::fcsr_run(std::move(st), n)};
  });
}

adic2_status adic2_fcsr_rational(const char* taps, const char* reg,
                                 const char* carry, char** f_out,
                                 char** q_out) {
  if (!taps) return fail_null("taps");
  if (!reg) return fail_null("reg");
  if (!f_out) return fail_null("f_out");
  if (!q_out) return fail_null("q_out");
  return guarded([&] {
    adic2::FcsrState st(parse_cells(taps, "taps"), parse_cells(reg, "reg"),
                        carry ? parse_decimal(carry, "carry") : mpz_class(0));
    auto [f, q] = adic2::fcsr_fraction(st);
    char* fs = dup_string(f.get_str());
    char* qs = dup_string(q.get_str());
    if (!fs || !qs) {
      std::free(fs);
      std::free(qs);
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
    }
    *f_out = fs;
    *q_out = qs;
  });
}

adic2_status adic2_roots_z2(const char* poly, unsigned n, adic2_roots** out) {
  if (!poly) return fail_null("poly");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (n < 1) adic2::fail(adic2::errc::invalid_argument, "n must be >= 1");
    auto r = std::make_unique<adic2_roots>();
    r->prec = n;
    r->hz = adic2::IntPoly::parse(poly);
    r->zr = adic2::roots_z2(*r->hz, n);
    *out = r.release();
  });
}

adic2_status adic2_roots_f2x(const char* quad, unsigned n, adic2_roots** out) {
  if (!quad) return fail_null("quad");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (n < 1) adic2::fail(adic2::errc::invalid_argument, "n must be >= 1");
    auto r = std::make_unique<adic2_roots>();
    r->prec = n;
    r->hx = adic2::F2YQuad::parse(quad);
    r->sr = adic2::roots_f2series(*r->hx, n);
    *out = r.release();
  });
}

void adic2_roots_free(adic2_roots* r) { delete r; }

size_t adic2_roots_count(const adic2_roots* r) { return r ? r->count() : 0; }

adic2_status adic2_roots_label(const adic2_roots* r, char** out) {
  if (!r) return fail_null("roots");
  if (!out) return fail_null("out");
  std::string label = r->hz ? adic2::z2_case_name(r->zr.label) : r->sr.label;
  return give_string(label, out);
}

int adic2_roots_nonintegral(const adic2_roots* r) {
  if (!r) return 0;
  return r->hz ? r->zr.nonintegral_roots : r->sr.nonintegral_roots;
}

adic2_status adic2_roots_get(const adic2_roots* r, size_t i,
                             adic2_bits** out) {
  if (!r) return fail_null("roots");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (i >= r->count())
      adic2::fail(adic2::errc::no_root,
                  "root index " + std::to_string(i) + " out of range (" +
                      std::to_string(r->count()) + " roots)");
    adic2::BitString v = r->hz ? adic2::from_dyadic(r->zr.roots[i])
                               : adic2::from_series(r->sr.roots[i]);
    *out = new adic2_bits{std::move(v)};
  });
}

adic2_status adic2_roots_sparse(const adic2_roots* r, size_t i, char** out) {
  if (!r) return fail_null("roots");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (i >= r->count())
      adic2::fail(adic2::errc::no_root,
                  "root index " + std::to_string(i) + " out of range (" +
                      std::to_string(r->count()) + " roots)");
    std::string s = r->hz ? adic2::to_sparse(r->zr.roots[i])
                          : adic2::to_sparse(r->sr.roots[i]);
    if (give_string(s, out) != ADIC2_OK)
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
  });
}

adic2_status adic2_roots_certify(const adic2_roots* r, size_t i, int* ok) {
  if (!r) return fail_null("roots");
  if (!ok) return fail_null("ok");
  return guarded([&] {
    if (i >= r->count())
      adic2::fail(adic2::errc::no_root,
                  "root index " + std::to_string(i) + " out of range (" +
                      std::to_string(r->count()) + " roots)");
    if (r->hz) {
      *ok = adic2::eval_mod2k(*r->hz, r->zr.roots[i]).value() == 0 ? 1 : 0;
    } else {
      adic2::F2Series v = adic2::eval_quad(*r->hx, r->sr.roots[i]);
      int good = 1;
      for (unsigned j = 0; j < v.precision(); ++j)
        if (v.coeff(j)) good = 0;
      *ok = good;
    }
  });
}

adic2_status adic2_profile_run(const adic2_bits* b, const char* method,
                               adic2_profile** out) {
  if (!b) return fail_null("bits");
  if (!out) return fail_null("out");
  return guarded([&] {
    std::string m = method ? method : "auto";
    adic2::adic_method sel;
    if (m == "auto")
      sel = adic2::adic_method::auto_select;
    else if (m == "bruteforce")
      sel = adic2::adic_method::bruteforce;
    else if (m == "lattice")
      sel = adic2::adic_method::lattice;
    else
      adic2::fail(adic2::errc::invalid_argument,
                  "unknown method '" + m +
                      "'; expected auto, bruteforce, or lattice");
    *out = new adic2_profile{adic2::adic_profile(b->v, sel)};
  });
}

void adic2_profile_free(adic2_profile* p) { delete p; }

size_t adic2_profile_len(const adic2_profile* p) {
  return p ? p->p.rows.size() : 0;
}

adic2_status adic2_profile_csv(const adic2_profile* p, char** out) {
  if (!p) return fail_null("profile");
  if (!out) return fail_null("out");
  return guarded([&] {
    if (give_string(adic2::profile_csv(p->p), out) != ADIC2_OK)
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
  });
}

adic2_status adic2_profile_row(const adic2_profile* p, unsigned n,
                               char** lambda, double* lambda_log2, char** f,
                               char** q, unsigned* linear) {
  if (!p) return fail_null("profile");
  return guarded([&] {
    if (n < 1 || n > p->p.rows.size())
      adic2::fail(adic2::errc::invalid_argument,
                  "row " + std::to_string(n) + " out of range");
    const adic2::ProfileRow& row = p->p.rows[n - 1];
    char* ls = lambda ? dup_string(row.lambda_exact.get_str()) : nullptr;
    char* fs = f ? dup_string(row.rep.f.get_str()) : nullptr;
    char* qs = q ? dup_string(row.rep.q.get_str()) : nullptr;
    if ((lambda && !ls) || (f && !fs) || (q && !qs)) {
      std::free(ls);
      std::free(fs);
      std::free(qs);
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
    }
    if (lambda) *lambda = ls;
    if (f) *f = fs;
    if (q) *q = qs;
    if (lambda_log2) *lambda_log2 = row.lambda_log2;
    if (linear) *linear = row.lin_complexity;
  });
}

adic2_status adic2_verify(const char* suite, unsigned seed,
                          const char* out_dir, char** report) {
  if (!suite) return fail_null("suite");
  bool all_pass = false;
  adic2_status st = guarded([&] {
    adic2::SuiteResult s =
        adic2::run_verify_suite(suite, seed, out_dir ? out_dir : ".");
    std::string text;
    for (const adic2::CheckResult& c : s.checks) {
      text += c.pass ? "[PASS] " : "[FAIL] ";
      text += c.name + ": " + c.detail + "\n";
    }
    all_pass = s.all_pass();
    if (report && give_string(text, report) != ADIC2_OK)
      adic2::fail(adic2::errc::invalid_argument, "out of memory");
  });
  if (st != ADIC2_OK) return st;
  if (!all_pass) {
    g_last_error = "one or more checks failed";
    return ADIC2_ERR_VERIFY_FAILED;
  }
  return ADIC2_OK;
}

} // extern "C"
