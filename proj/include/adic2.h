/* C interface to the 2-adic / F2[[X]] sequence-complexity library.
 *
 * Conventions:
 *   - Every fallible call returns adic2_status; ADIC2_OK is 0.
 *   - On failure, outputs are untouched and adic2_last_error() returns a
 *     thread-local message describing the most recent failure.
 *   - char** outputs receive malloc'd strings; release with
 *     adic2_string_free. Handle outputs have matching *_free functions.
 *   - Bit strings are low-index-first: bit n is the coefficient of 2^n
 *     (or X^n). Text form is '0'/'1' characters in that order.
 */
#ifndef ADIC2_H
#define ADIC2_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ADIC2_API __attribute__((visibility("default")))

typedef enum adic2_status {
  ADIC2_OK = 0,
  ADIC2_ERR_EVEN_UNIT,
  ADIC2_ERR_NOT_A_SIMPLE_ROOT,
  ADIC2_ERR_LIFTING_TREE_OVERFLOW,
  ADIC2_ERR_EVEN_DENOMINATOR,
  ADIC2_ERR_NON_UNIT,
  ADIC2_ERR_NOT_LIFTABLE,
  ADIC2_ERR_PRECISION_EXHAUSTED,
  ADIC2_ERR_PREFIX_TOO_LONG,
  ADIC2_ERR_MALFORMED_FILE,
  ADIC2_ERR_DEGREE_TOO_LOW,
  ADIC2_ERR_RATIONAL_ROOT,
  ADIC2_ERR_NO_ROOT,
  ADIC2_ERR_PARSE,
  ADIC2_ERR_INVALID_ARGUMENT,
  ADIC2_ERR_IO,
  ADIC2_ERR_VERIFY_FAILED,
  ADIC2_ERR_UNKNOWN
} adic2_status;

typedef struct adic2_bits adic2_bits;       /* binary sequence */
typedef struct adic2_roots adic2_roots;     /* root listing with case label */
typedef struct adic2_profile adic2_profile; /* per-prefix complexity table */

ADIC2_API const char* adic2_version(void);
ADIC2_API const char* adic2_status_name(adic2_status st);
ADIC2_API const char* adic2_last_error(void);
ADIC2_API void adic2_string_free(char* s);

/* ---- bit sequences ---- */
ADIC2_API void adic2_bits_free(adic2_bits* b);
ADIC2_API size_t adic2_bits_len(const adic2_bits* b);
/* bit at index i, or -1 when i is out of range */
ADIC2_API int adic2_bits_get(const adic2_bits* b, size_t i);
/* single unwrapped line "0110..." */
ADIC2_API adic2_status adic2_bits_line(const adic2_bits* b, char** out);
/* file form: 64 bits per line, trailing newline */
ADIC2_API adic2_status adic2_bits_format(const adic2_bits* b, char** out);
ADIC2_API adic2_status adic2_bits_parse(const char* text, adic2_bits** out);
ADIC2_API adic2_status adic2_bits_load(const char* path, adic2_bits** out);
ADIC2_API adic2_status adic2_bits_store(const adic2_bits* b, const char* path);

/* ---- generators ---- */
/* name: thue-morse | thue-morse-dual | sqrt17 | sqrt-7 */
ADIC2_API adic2_status adic2_generate_preset(const char* name, unsigned n,
                                             adic2_bits** out);
/* 2-adic expansion of f/q; decimal strings, q odd */
ADIC2_API adic2_status adic2_generate_rational(const char* f, const char* q,
                                               unsigned n, adic2_bits** out);
/* taps/reg as '0'/'1' strings, oldest cell first; carry decimal >= 0 */
ADIC2_API adic2_status adic2_generate_fcsr(const char* taps, const char* reg,
                                           const char* carry, unsigned n,
                                           adic2_bits** out);
/* connection integer and exact output value f/q of the machine */
ADIC2_API adic2_status adic2_fcsr_rational(const char* taps, const char* reg,
                                           const char* carry, char** f_out,
                                           char** q_out);

/* ---- roots ---- */
/* integer quadratic/higher-degree polynomial in Y, e.g. "3Y^2 - 4Y + 9" */
ADIC2_API adic2_status adic2_roots_z2(const char* poly, unsigned n,
                                      adic2_roots** out);
/* F2[X] quadratic: "(1+X^2)Y^2 + X^5*Y + X^2" or "a=1+X^2; b=X^5; c=X^2" */
ADIC2_API adic2_status adic2_roots_f2x(const char* quad, unsigned n,
                                       adic2_roots** out);
ADIC2_API void adic2_roots_free(adic2_roots* r);
ADIC2_API size_t adic2_roots_count(const adic2_roots* r);
/* classification label, e.g. "Case 2.1.2" or "Case 5.1 -> Case 4" */
ADIC2_API adic2_status adic2_roots_label(const adic2_roots* r, char** out);
/* roots that exist only outside the ring (counted, not listed) */
ADIC2_API int adic2_roots_nonintegral(const adic2_roots* r);
ADIC2_API adic2_status adic2_roots_get(const adic2_roots* r, size_t i,
                                       adic2_bits** out);
/* sparse rendering, e.g. "1 + 2^3 + 2^5" or "X + X^3 + X^7" */
ADIC2_API adic2_status adic2_roots_sparse(const adic2_roots* r, size_t i,
                                          char** out);
/* re-evaluates the source polynomial at root i; *ok = 1 when it vanishes
 * to the listing's precision */
ADIC2_API adic2_status adic2_roots_certify(const adic2_roots* r, size_t i,
                                           int* ok);

/* ---- complexity profiles ---- */
/* method: auto | bruteforce | lattice */
ADIC2_API adic2_status adic2_profile_run(const adic2_bits* b,
                                         const char* method,
                                         adic2_profile** out);
ADIC2_API void adic2_profile_free(adic2_profile* p);
ADIC2_API size_t adic2_profile_len(const adic2_profile* p);
/* header N,Lambda,lambda_log2,f,q,L and one row per prefix length */
ADIC2_API adic2_status adic2_profile_csv(const adic2_profile* p, char** out);
/* row for prefix length n (1-based). Any output pointer may be NULL. */
ADIC2_API adic2_status adic2_profile_row(const adic2_profile* p, unsigned n,
                                         char** lambda, double* lambda_log2,
                                         char** f, char** q, unsigned* linear);

/* ---- verification suites ---- */
/* suite: paper-examples | bounds | oracles | profiles. Returns ADIC2_OK
 * when every check passes, ADIC2_ERR_VERIFY_FAILED otherwise; *report
 * (optional) receives one "[PASS|FAIL] name: detail" line per check.
 * out_dir (optional) is where the profiles suite writes its CSVs. */
ADIC2_API adic2_status adic2_verify(const char* suite, unsigned seed,
                                    const char* out_dir, char** report);

#ifdef __cplusplus
}
#endif

#endif /* ADIC2_H */
