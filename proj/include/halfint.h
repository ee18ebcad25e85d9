/*
 * halfint -- exact certification toolkit for truncated q-expansions of
 * half-integral weight modular forms.
 *
 * C API over the C++ core: opaque handles, integer status codes, and
 * thread-local error messages. Every function that can fail returns
 * HALFINT_OK (0) on success or a negative halfint_status; the message for
 * the most recent failure on the calling thread is available through
 * halfint_last_error(). Strings returned through char** out-parameters are
 * heap-allocated and must be released with halfint_string_free().
 *
 * All handles are immutable once created and may be shared across threads;
 * each handle must be released exactly once with its _free function.
 */

#ifndef HALFINT_H
#define HALFINT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct halfint_field halfint_field;
typedef struct halfint_char halfint_char;
typedef struct halfint_qexp halfint_qexp;
typedef struct halfint_bound halfint_bound;
typedef struct halfint_cert halfint_cert;

typedef enum halfint_status {
  HALFINT_OK = 0,
  HALFINT_ERR_NULL = -1,
  HALFINT_ERR_BAD_ARGUMENT = -2,
  HALFINT_ERR_PARSE = -3,
  HALFINT_ERR_FIELD_SPEC = -4,
  HALFINT_ERR_NOT_MONIC = -5,
  HALFINT_ERR_NOT_SQUAREFREE = -6,
  HALFINT_ERR_FIELD_MISMATCH = -7,
  HALFINT_ERR_DIVISION_BY_ZERO = -8,
  HALFINT_ERR_SINGULAR = -9,
  HALFINT_ERR_BAD_LEVEL = -10,
  HALFINT_ERR_BAD_WEIGHT = -11,
  HALFINT_ERR_RANK_DEFICIENT = -12,
  HALFINT_ERR_INSUFFICIENT_ROWS = -13,
  HALFINT_ERR_ZERO_LEADING_COEFF = -14,
  HALFINT_ERR_PRECISION = -15,
  HALFINT_ERR_NO_PIVOT = -16,
  HALFINT_ERR_PIVOT_VIOLATION = -17,
  HALFINT_ERR_SHAPE = -18,
  HALFINT_ERR_EMPTY_WINDOW = -19,
  HALFINT_ERR_IO = -20,
  HALFINT_ERR_INTERNAL = -21
} halfint_status;

/* Verdicts carried by certificates. */
typedef enum halfint_verdict {
  HALFINT_VERDICT_CERTIFIED = 0,
  HALFINT_VERDICT_RECOVERED = 1,
  HALFINT_VERDICT_KERNEL_COMPUTED = 2,
  HALFINT_VERDICT_NOT_IN_SPAN = 3,
  HALFINT_VERDICT_NOT_IN_PLUS_SPACE = 4,
  HALFINT_VERDICT_CONSISTENT_UP_TO = 5,
  /* vanishing test only */
  HALFINT_VERDICT_CERTIFIED_ZERO = 6,
  HALFINT_VERDICT_NONZERO_AT = 7,
  HALFINT_VERDICT_INSUFFICIENT_PRECISION = 8
} halfint_verdict;

const char* halfint_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
const char* halfint_last_error(void);
void halfint_clear_last_error(void);

void halfint_string_free(char* s);

/* ---- number fields ------------------------------------------------- */

/* minpoly_csv: comma-separated rationals c0,...,cd with cd = 1. */
halfint_status halfint_field_new(const char* minpoly_csv, const char* generator_name,
                                 halfint_field** out);
halfint_status halfint_field_rationals(halfint_field** out);
halfint_status halfint_field_degree(const halfint_field* f, int64_t* out);
halfint_status halfint_field_spec(const halfint_field* f, char** out);
void halfint_field_free(halfint_field* f);

/* ---- Dirichlet characters ------------------------------------------ */

/* Grammar: triv:N | minus4 | kron:d | prod(spec,spec). */
halfint_status halfint_char_parse(const char* spec, halfint_char** out);
halfint_status halfint_char_spec(const halfint_char* c, char** out);
halfint_status halfint_char_eval(const halfint_char* c, int64_t n, int* out);
halfint_status halfint_char_modulus(const halfint_char* c, int64_t* out);
halfint_status halfint_char_order(const halfint_char* c, int* out);
halfint_status halfint_char_is_even(const halfint_char* c, int* out);
halfint_status halfint_char_product(const halfint_char* a, const halfint_char* b,
                                    halfint_char** out);
halfint_status halfint_char_power(const halfint_char* c, int64_t e, halfint_char** out);
void halfint_char_free(halfint_char* c);

/* ---- q-expansions --------------------------------------------------- */

halfint_status halfint_qexp_parse(const char* text, halfint_qexp** out);
halfint_status halfint_qexp_to_string(const halfint_qexp* q, char** out);
halfint_status halfint_qexp_read_file(const char* path, halfint_qexp** out);
halfint_status halfint_qexp_write_file(const halfint_qexp* q, const char* path);

halfint_status halfint_qexp_first(const halfint_qexp* q, int64_t* out);
halfint_status halfint_qexp_prec(const halfint_qexp* q, int64_t* out);
/* Coefficient of q^n as a comma-separated rational list; n < prec. */
halfint_status halfint_qexp_coeff(const halfint_qexp* q, int64_t n, char** out);
halfint_status halfint_qexp_is_zero(const halfint_qexp* q, int* out);
halfint_status halfint_qexp_equal(const halfint_qexp* a, const halfint_qexp* b, int* out);

halfint_status halfint_qexp_add(const halfint_qexp* a, const halfint_qexp* b, halfint_qexp** out);
/* scalar_csv is a field element of a's field (comma-separated coefficients). */
halfint_status halfint_qexp_scale(const halfint_qexp* a, const char* scalar_csv,
                                  halfint_qexp** out);
halfint_status halfint_qexp_mul(const halfint_qexp* a, const halfint_qexp* b, halfint_qexp** out);
halfint_status halfint_qexp_theta(int64_t prec, halfint_qexp** out);
halfint_status halfint_qexp_theta1(int64_t prec, halfint_qexp** out);
halfint_status halfint_qexp_theta_twisted(const halfint_char* psi, int64_t prec,
                                          halfint_qexp** out);
halfint_status halfint_qexp_u(int64_t d, const halfint_qexp* q, halfint_qexp** out);
halfint_status halfint_qexp_v(int64_t d, const halfint_qexp* q, halfint_qexp** out);
/* check_via_uv != 0 with (r, m) = (2, 4) recomputes the slice through the
 * V(2)U(2) - V(4)U(4) composite and asserts the two routes agree. */
halfint_status halfint_qexp_slice(const halfint_qexp* q, int64_t r, int64_t m, int check_via_uv,
                                  halfint_qexp** out);
void halfint_qexp_free(halfint_qexp* q);

/* ---- bounds ---------------------------------------------------------- */

halfint_status halfint_gamma0_index(int64_t n, int64_t* out);
/* kohnen != 0 computes k*[SL2:Gamma0(4N)]/24 instead of k*[SL2:Gamma0(N)]/24. */
halfint_status halfint_bound_sturm(int64_t k, int64_t n, int kohnen, halfint_bound** out);
/* Caller-chosen cutoff for span certification on short data. */
halfint_status halfint_bound_window(int64_t k, int64_t n, int64_t upto, halfint_bound** out);
halfint_status halfint_bound_index(const halfint_bound* b, int64_t* out);
halfint_status halfint_bound_exact(const halfint_bound* b, char** out); /* "p/q" */
halfint_status halfint_bound_floor(const halfint_bound* b, int64_t* out);
void halfint_bound_free(halfint_bound* b);

/* Definitive verdicts need prec > floor(B); out_index is the least nonzero
 * index for NONZERO_AT and the needed precision for INSUFFICIENT_PRECISION. */
halfint_status halfint_vanishing_test(const halfint_qexp* f, int64_t k, int64_t n,
                                      halfint_verdict* out_verdict, int64_t* out_index);

/* ---- certification --------------------------------------------------- */

halfint_status halfint_recover_cofactor(const halfint_qexp* product, const halfint_qexp* factor,
                                        halfint_qexp** out_cofactor, halfint_cert** out_cert);
halfint_status halfint_certify_span(const halfint_qexp* const* basis, size_t r,
                                    const halfint_qexp* target, const halfint_bound* bound,
                                    int allow_short_window, halfint_cert** out);
halfint_status halfint_select_pivots(const halfint_qexp* f1, const halfint_qexp* f2, int64_t k,
                                     int64_t n, int64_t* out_m0, int64_t* out_n0);
/* value_m0/value_n0: field elements as comma-separated coefficient lists. */
halfint_status halfint_certify_rank2(const halfint_qexp* f1, const halfint_qexp* f2, int64_t k,
                                     int64_t n, const char* value_m0, const char* value_n0,
                                     halfint_cert** out);
/* As above with caller-chosen pivot indices (validated; PivotViolation). */
halfint_status halfint_certify_rank2_at(const halfint_qexp* f1, const halfint_qexp* f2, int64_t k,
                                        int64_t n, int64_t m0, int64_t n0, const char* value_m0,
                                        const char* value_n0, halfint_cert** out);
halfint_status halfint_kohnen_check(const halfint_qexp* f, int64_t k, int64_t n,
                                    halfint_cert** out);
/* images is row-major prime-major: images[j*r + i] is the image of basis[i]
 * at primes[j]; eigenvalue_csv[j] is the field element for primes[j]. */
halfint_status halfint_subspace_kernel(const halfint_qexp* const* basis, size_t r,
                                       const int64_t* primes, size_t s,
                                       const halfint_qexp* const* images,
                                       const char* const* eigenvalue_csv, int64_t window_lo,
                                       int64_t window_hi, halfint_cert** out);

/* ---- certificates ----------------------------------------------------- */

halfint_status halfint_cert_verdict(const halfint_cert* c, halfint_verdict* out);
/* Least violating / last checked index; -1 when not applicable. */
halfint_status halfint_cert_verdict_index(const halfint_cert* c, int64_t* out);
/* 0 certified/success, 1 definitive negative, 2 indeterminate. */
halfint_status halfint_cert_exit_code(const halfint_cert* c, int* out);
halfint_status halfint_cert_report(const halfint_cert* c, char** out);
halfint_status halfint_cert_machine(const halfint_cert* c, char** out);
halfint_status halfint_cert_lambda_count(const halfint_cert* c, size_t* out);
halfint_status halfint_cert_lambda(const halfint_cert* c, size_t i, char** out);
halfint_status halfint_cert_kernel_dim(const halfint_cert* c, size_t* out);
halfint_status halfint_cert_kernel_entry(const halfint_cert* c, size_t vec, size_t pos,
                                         char** out);
/* Reconstructed expansion (span/rank2/recovery); HALFINT_ERR_BAD_ARGUMENT
 * when the certificate carries none. */
halfint_status halfint_cert_reconstruction(const halfint_cert* c, halfint_qexp** out);
void halfint_cert_free(halfint_cert* c);

#ifdef __cplusplus
}
#endif

#endif /* HALFINT_H */
