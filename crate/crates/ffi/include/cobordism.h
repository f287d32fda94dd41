#ifndef COBORDISM_H
#define COBORDISM_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CobProfile {
  COB_PROFILE_FULL = 0,
  COB_PROFILE_QUICK = 1,
} CobProfile;

/**
 * Outcome recorded in a report.
 */
typedef enum CobReportStatus {
  COB_REPORT_STATUS_PASS = 0,
  COB_REPORT_STATUS_FAIL = 1,
  COB_REPORT_STATUS_ERROR = 2,
} CobReportStatus;

/**
 * Result of a library call.
 */
typedef enum CobStatus {
  COB_STATUS_OK = 0,
  COB_STATUS_NULL_POINTER = 1,
  COB_STATUS_INVALID_UTF8 = 2,
  COB_STATUS_UNKNOWN_CHECK = 3,
  COB_STATUS_INVALID_ARGUMENT = 4,
  COB_STATUS_PANIC = 5,
} CobStatus;

/**
 * A polynomial over F2.
 */
typedef struct CobPolynomial CobPolynomial;

/**
 * A verification report.
 */
typedef struct CobReport CobReport;

/**
 * Suite parameters; a negative value means "use the profile default".
 */
typedef struct CobParams {
  enum CobProfile profile;
  int64_t max_degree;
  int64_t n;
  int64_t max_n;
  int64_t t_max;
} CobParams;

typedef struct CobBinomSolution {
  uint64_t n;
  uint64_t a;
  uint64_t b;
  uint32_t i;
  uint32_t j;
} CobBinomSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or NULL. Valid until
 * the next library call on this thread; do not free.
 */
const char *cob_last_error(void);

/**
 * Library version as a static string.
 */
const char *cob_version(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void cob_string_free(char *s);

/**
 * Runs the suite `check_id` (or `all`). `params` may be NULL for the full
 * profile defaults.
 *
 * # Safety
 * `check_id` must be a NUL-terminated string, `params` NULL or valid, and
 * `out` a valid pointer.
 */
enum CobStatus cob_run_check(const char *check_id,
                             const struct CobParams *params,
                             struct CobReport **out);

/**
 * # Safety
 * `report` must be a live handle.
 */
enum CobReportStatus cob_report_status(const struct CobReport *report);

/**
 * Number of case records in the report.
 *
 * # Safety
 * `report` must be a live handle.
 */
size_t cob_report_case_count(const struct CobReport *report);

/**
 * The report as JSON; free with [`cob_string_free`]. NULL for a NULL handle.
 *
 * # Safety
 * `report` must be a live handle.
 */
char *cob_report_json(const struct CobReport *report);

/**
 * # Safety
 * `report` must be NULL or a live handle, not used afterwards.
 */
void cob_report_free(struct CobReport *report);

/**
 * `π_!(ṽ^*(p_n))` modulo `y6` for the primitive `p_n` of degree `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CobStatus cob_transfer_sn(uint32_t n, struct CobPolynomial **out);

/**
 * `z_n` in `Z/2[y2, y3]`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CobStatus cob_z_value(uint32_t n, struct CobPolynomial **out);

/**
 * The polynomial as text, graded-lex; free with [`cob_string_free`].
 *
 * # Safety
 * `p` must be a live handle.
 */
char *cob_polynomial_to_string(const struct CobPolynomial *p);

/**
 * # Safety
 * `p` must be a live handle.
 */
size_t cob_polynomial_term_count(const struct CobPolynomial *p);

/**
 * # Safety
 * `p` must be NULL or a live handle, not used afterwards.
 */
void cob_polynomial_free(struct CobPolynomial *p);

/**
 * `S_n(PE_r)` as a decimal string; free with [`cob_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CobStatus cob_s_n_pe(uint64_t n, uint64_t r, char **out);

/**
 * `C(n, k) mod 2`.
 */
uint8_t cob_binom_parity(uint64_t n, uint64_t k);

/**
 * The constructive solution for odd `n >= 5` not of the form `2^k - 1`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CobStatus cob_lemma_binom(uint64_t n, struct CobBinomSolution *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COBORDISM_H */
