// Command-line front end. Talks to the library exclusively through the
// shared-library C interface in adic2.h.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "adic2.h"

namespace {

int map_exit(adic2_status st) {
  switch (st) {
    case ADIC2_OK: return 0;
    case ADIC2_ERR_VERIFY_FAILED: return 1;
    case ADIC2_ERR_IO: return 3;
    default: return 2;
  }
}

int report_error(adic2_status st) {
  std::fprintf(stderr, "error: %s (%s)\n", adic2_last_error(),
               adic2_status_name(st));
  return map_exit(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  adic2_string_free(s);
  return out;
}

struct SourceOpts {
  std::string preset;
  std::string poly;
  std::string f2x;
  std::string rational;
  std::string in_path;
  unsigned root = 0;
  unsigned n = 0;
};

void add_source_flags(CLI::App* sub, SourceOpts& src) {
  sub->add_option("--preset", src.preset,
                  "thue-morse, thue-morse-dual, sqrt17, or sqrt-7");
  sub->add_option("--poly", src.poly,
                  "integer polynomial in Y, e.g. \"3Y^2 - 4Y + 9\"");
  sub->add_option("--f2x", src.f2x,
                  "quadratic over F2[X], e.g. \"(1+X)Y^2 + Y + X^2\" or "
                  "\"a=1+X; b=1; c=X^2\"");
  sub->add_option("--rational", src.rational, "fraction f/q, e.g. -1/1");
  sub->add_option("--in", src.in_path, "bitstring file");
  sub->add_option("--root", src.root, "root index for --poly/--f2x")
      ->default_val(0);
}

// Splits "f/q"; a bare "f" means denominator 1.
bool split_fraction(const std::string& text, std::string& f, std::string& q) {
  auto pos = text.find('/');
  if (pos == std::string::npos) {
    f = text;
    q = "1";
    return !f.empty();
  }
  f = text.substr(0, pos);
  q = text.substr(pos + 1);
  return !f.empty() && !q.empty() && q.find('/') == std::string::npos;
}

// Resolves a source description to a bit sequence of length n (or the whole
// file when n = 0 and the source is a file). For polynomial sources the
// root is re-certified and a certificate line goes to stderr.
adic2_status resolve_bits(const SourceOpts& src, adic2_bits** out) {
  int sources = !src.preset.empty() + !src.poly.empty() + !src.f2x.empty() +
                !src.rational.empty() + !src.in_path.empty();
  if (sources != 1) {
    std::fprintf(stderr,
                 "error: give exactly one of --preset, --poly, --f2x, "
                 "--rational, --in\n");
    return ADIC2_ERR_INVALID_ARGUMENT;
  }

  if (!src.in_path.empty()) {
    adic2_bits* whole = nullptr;
    adic2_status st = adic2_bits_load(src.in_path.c_str(), &whole);
    if (st != ADIC2_OK) return st;
    if (src.n == 0 || src.n == adic2_bits_len(whole)) {
      *out = whole;
      return ADIC2_OK;
    }
    if (src.n > adic2_bits_len(whole)) {
      std::fprintf(stderr, "error: %s holds %zu bits, need %u\n",
                   src.in_path.c_str(), adic2_bits_len(whole), src.n);
      adic2_bits_free(whole);
      return ADIC2_ERR_INVALID_ARGUMENT;
    }
    char* line = nullptr;
    st = adic2_bits_line(whole, &line);
    adic2_bits_free(whole);
    if (st != ADIC2_OK) return st;
    std::string prefix = take(line).substr(0, src.n);
    return adic2_bits_parse(prefix.c_str(), out);
  }

  if (src.n < 1) {
    std::fprintf(stderr, "error: --n is required for this source\n");
    return ADIC2_ERR_INVALID_ARGUMENT;
  }

  if (!src.preset.empty())
    return adic2_generate_preset(src.preset.c_str(), src.n, out);

  if (!src.rational.empty()) {
    std::string f, q;
    if (!split_fraction(src.rational, f, q)) {
      std::fprintf(stderr, "error: --rational expects f/q\n");
      return ADIC2_ERR_PARSE;
    }
    return adic2_generate_rational(f.c_str(), q.c_str(), src.n, out);
  }

  // Polynomial sources: list roots, pick the requested index, certify.
  const bool dyadic = !src.poly.empty();
  adic2_roots* roots = nullptr;
  adic2_status st =
      dyadic ? adic2_roots_z2(src.poly.c_str(), src.n, &roots)
             : adic2_roots_f2x(src.f2x.c_str(), src.n, &roots);
  if (st != ADIC2_OK) return st;

  int ok = 0;
  st = adic2_roots_certify(roots, src.root, &ok);
  if (st == ADIC2_OK && !ok) {
    adic2_roots_free(roots);
    std::fprintf(stderr, "error: root certificate check failed\n");
    return ADIC2_ERR_NO_ROOT;
  }
  if (st == ADIC2_OK) st = adic2_roots_get(roots, src.root, out);
  adic2_roots_free(roots);
  if (st != ADIC2_OK) return st;

  std::fprintf(stderr, "certificate: root %u satisfies h = 0 mod %s^%u\n",
               src.root, dyadic ? "2" : "X", src.n);
  return ADIC2_OK;
}

int emit_bits(adic2_bits* bits, const std::string& out_path) {
  if (out_path.empty()) {
    char* line = nullptr;
    adic2_status st = adic2_bits_line(bits, &line);
    if (st != ADIC2_OK) return report_error(st);
    std::printf("%s\n", take(line).c_str());
    return 0;
  }
  adic2_status st = adic2_bits_store(bits, out_path.c_str());
  if (st != ADIC2_OK) return report_error(st);
  return 0;
}

int run_generate(const SourceOpts& src, const std::string& out_path) {
  adic2_bits* bits = nullptr;
  adic2_status st = resolve_bits(src, &bits);
  if (st != ADIC2_OK) return report_error(st);
  int rc = emit_bits(bits, out_path);
  adic2_bits_free(bits);
  return rc;
}

int run_roots(const SourceOpts& src) {
  const bool dyadic = !src.poly.empty();
  if (dyadic == !src.f2x.empty()) {
    std::fprintf(stderr, "error: give exactly one of --z2/--poly, --f2x\n");
    return 2;
  }
  adic2_roots* roots = nullptr;
  adic2_status st =
      dyadic ? adic2_roots_z2(src.poly.c_str(), src.n, &roots)
             : adic2_roots_f2x(src.f2x.c_str(), src.n, &roots);
  if (st != ADIC2_OK) return report_error(st);

  char* label = nullptr;
  st = adic2_roots_label(roots, &label);
  if (st != ADIC2_OK) {
    adic2_roots_free(roots);
    return report_error(st);
  }
  std::printf("case: %s\n", take(label).c_str());
  size_t count = adic2_roots_count(roots);
  std::printf("roots: %zu\n", count);
  int outside = adic2_roots_nonintegral(roots);
  if (outside > 0)
    std::printf("non-integral roots (not expanded): %d\n", outside);
  for (size_t i = 0; i < count; ++i) {
    char* sparse = nullptr;
    st = adic2_roots_sparse(roots, i, &sparse);
    if (st != ADIC2_OK) {
      adic2_roots_free(roots);
      return report_error(st);
    }
    std::printf("root %zu: %s\n", i, take(sparse).c_str());
  }
  adic2_roots_free(roots);
  return 0; // an empty list is an answer, not an error
}

int run_profile(const SourceOpts& src, const std::string& method,
                const std::string& out_path) {
  adic2_bits* bits = nullptr;
  adic2_status st = resolve_bits(src, &bits);
  if (st != ADIC2_OK) return report_error(st);

  adic2_profile* prof = nullptr;
  st = adic2_profile_run(bits, method.c_str(), &prof);
  adic2_bits_free(bits);
  if (st != ADIC2_OK) return report_error(st);

  char* csv = nullptr;
  st = adic2_profile_csv(prof, &csv);
  adic2_profile_free(prof);
  if (st != ADIC2_OK) return report_error(st);
  std::string text = take(csv);

  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::FILE* fp = std::fopen(out_path.c_str(), "wb");
  if (!fp || std::fwrite(text.data(), 1, text.size(), fp) != text.size()) {
    if (fp) std::fclose(fp);
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return 3;
  }
  std::fclose(fp);
  return 0;
}

int run_verify(const std::string& suite, unsigned seed,
               const std::string& out_dir) {
  char* report = nullptr;
  adic2_status st =
      adic2_verify(suite.c_str(), seed, out_dir.c_str(), &report);
  if (report) std::fputs(take(report).c_str(), stdout);
  if (st == ADIC2_ERR_VERIFY_FAILED) return 1;
  if (st != ADIC2_OK) return report_error(st);
  return 0;
}

int run_fcsr(const std::string& taps, const std::string& reg,
             const std::string& carry, bool any_carry, unsigned n,
             const std::string& out_path) {
  if (!any_carry) {
    unsigned long weight = 0;
    for (char c : taps)
      if (c == '1') ++weight;
    char* end = nullptr;
    unsigned long z = std::strtoul(carry.c_str(), &end, 10);
    bool numeric = end && *end == '\0' && !carry.empty();
    if (!numeric || carry.size() > 18 || z >= (weight ? weight : 1)) {
      std::fprintf(stderr,
                   "error: initial carry %s is outside [0, %lu); pass "
                   "--any-carry to allow it\n",
                   carry.c_str(), weight ? weight : 1);
      return 2;
    }
  }

  adic2_bits* bits = nullptr;
  adic2_status st =
      adic2_generate_fcsr(taps.c_str(), reg.c_str(), carry.c_str(), n, &bits);
  if (st != ADIC2_OK) return report_error(st);

  char* f = nullptr;
  char* q = nullptr;
  st = adic2_fcsr_rational(taps.c_str(), reg.c_str(), carry.c_str(), &f, &q);
  if (st != ADIC2_OK) {
    adic2_bits_free(bits);
    return report_error(st);
  }
  std::string fs = take(f), qs = take(q);
  std::fprintf(stderr, "connection: %s\nfraction: %s/%s\n", qs.c_str(),
               fs.c_str(), qs.c_str());
  int rc = emit_bits(bits, out_path);
  adic2_bits_free(bits);
  return rc;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-adic and linear complexity toolkit for binary sequences"};
  app.set_config("--config", "", "key = value file; flags take precedence");
  app.require_subcommand(1);
  app.set_version_flag("--version", adic2_version());

  SourceOpts gen_src, prof_src, root_src;
  std::string gen_out, prof_out, prof_method = "auto";
  std::string verify_suite, verify_out = ".";
  unsigned verify_seed = 1;
  std::string fcsr_taps, fcsr_reg, fcsr_carry = "0", fcsr_out;
  unsigned fcsr_n = 0;
  bool fcsr_any_carry = false;

  CLI::App* gen = app.add_subcommand(
      "generate", "expand a sequence source to N bits");
  gen->fallthrough();
  add_source_flags(gen, gen_src);
  gen->add_option("--n", gen_src.n, "number of bits");
  gen->add_option("--out", gen_out, "write wrapped bitstring file");

  CLI::App* roots = app.add_subcommand(
      "roots", "list roots of a polynomial with case classification");
  roots->fallthrough();
  roots->add_option("--poly,--z2", root_src.poly,
                    "integer polynomial in Y (roots in the 2-adic integers)");
  roots->add_option("--f2x", root_src.f2x,
                    "quadratic over F2[X] (roots in F2[[X]])");
  roots->add_option("--n", root_src.n, "truncation precision")
      ->default_val(10);

  CLI::App* prof = app.add_subcommand(
      "profile", "exact 2-adic and linear complexity profile as CSV");
  prof->fallthrough();
  add_source_flags(prof, prof_src);
  prof->add_option("--n", prof_src.n, "profile length");
  prof->add_option("--method", prof_method, "bruteforce, lattice, or auto")
      ->default_val("auto")
      ->check(CLI::IsMember({"bruteforce", "lattice", "auto"}));
  prof->add_option("--out", prof_out, "write CSV file");

  CLI::App* verify = app.add_subcommand(
      "verify", "run a named check suite and report per-check status");
  verify->fallthrough();
  verify->add_option("suite", verify_suite,
                     "paper-examples, bounds, oracles, or profiles")
      ->required();
  verify->add_option("--seed", verify_seed, "seed for randomized checks")
      ->default_val(1);
  verify->add_option("--out", verify_out, "directory for emitted CSV files")
      ->default_val(".");

  CLI::App* fcsr = app.add_subcommand(
      "fcsr", "run a feedback-with-carry shift register");
  fcsr->fallthrough();
  fcsr->add_option("--taps", fcsr_taps, "tap bits, oldest cell first")
      ->required();
  fcsr->add_option("--reg", fcsr_reg, "initial register, oldest cell first")
      ->required();
  fcsr->add_option("--carry", fcsr_carry, "initial carry")->default_val("0");
  fcsr->add_flag("--any-carry", fcsr_any_carry,
                 "allow carries at or above the tap weight");
  fcsr->add_option("--n", fcsr_n, "number of output bits")->required();
  fcsr->add_option("--out", fcsr_out, "write wrapped bitstring file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (gen->parsed()) return run_generate(gen_src, gen_out);
  if (roots->parsed()) return run_roots(root_src);
  if (prof->parsed()) return run_profile(prof_src, prof_method, prof_out);
  if (verify->parsed())
    return run_verify(verify_suite, verify_seed, verify_out);
  if (fcsr->parsed())
    return run_fcsr(fcsr_taps, fcsr_reg, fcsr_carry, fcsr_any_carry, fcsr_n,
                    fcsr_out);
  return 2;
}
