/* C interface of the cwsurgery library. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct CwRational CwRational;

// Status code of every fallible call.
typedef enum CwStatus {
  // Success.
  CW_STATUS_OK = 0,
  // A required pointer argument was null.
  CW_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  CW_STATUS_INVALID_UTF8 = 2,
  // Malformed or out-of-domain input (parse failures, zero
  // denominators, non-coprime pairs, inconsistent instances).
  CW_STATUS_INVALID_INPUT = 3,
  // The requested value is undefined for this input (for example the
  // surgered manifold is not a rational homology sphere).
  CW_STATUS_UNDEFINED = 4,
  // Input violates the hypotheses of the requested certificate/scan.
  CW_STATUS_HYPOTHESIS_VIOLATION = 5,
  // Internal serialization failure.
  CW_STATUS_INTERNAL_ERROR = 6,
} CwStatus;

// Manifold classes accepted by [`cw_certify_json`].
typedef enum CwManifoldClass {
  // Reducible L-space.
  CW_MANIFOLD_CLASS_REDUCIBLE = 0,
  // Lens space.
  CW_MANIFOLD_CLASS_LENS = 1,
  // Finite fundamental group.
  CW_MANIFOLD_CLASS_FINITE_PI1 = 2,
  // Small Seifert fibered L-space.
  CW_MANIFOLD_CLASS_SMALL_SFS_L_SPACE = 3,
} CwManifoldClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the message of the most recent failure on this thread, or null
// when the last call succeeded. The caller frees the string with
// [`cw_string_free`].
//
// # Safety
// `out` must be valid for writing one pointer.
enum CwStatus cw_last_error_message(char **out);

// Frees a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be a pointer previously returned by this library (or null) and
// must not be used afterwards.
void cw_string_free(char *s);

// Parses an exact rational from `"num/den"` or `"num"` text.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be valid for
// writing one pointer.
enum CwStatus cw_rational_parse(const char *text, CwRational **out);

// Formats an exact rational as `"num/den"`.
//
// # Safety
// `r` must be a live handle from this library; `out` must be valid for
// writing one pointer.
enum CwStatus cw_rational_format(const CwRational *r, char **out);

// Formats a decimal approximation with the given number of digits,
// rounded to nearest.
//
// # Safety
// `r` must be a live handle from this library; `out` must be valid for
// writing one pointer.
enum CwStatus cw_rational_approx(const CwRational *r, uint32_t digits, char **out);

// Frees a rational handle. Null is a no-op.
//
// # Safety
// `r` must be a handle previously returned by this library (or null) and
// must not be used afterwards.
void cw_rational_free(CwRational *r);

// Dedekind sum `s(p, q)` by reciprocity descent.
//
// # Safety
// `out` must be valid for writing one pointer.
enum CwStatus cw_dedekind_sum(int64_t p, int64_t q, CwRational **out);

// Dedekind sum `s(p, q)` by the defining summation (cross-check path).
//
// # Safety
// `out` must be valid for writing one pointer.
enum CwStatus cw_dedekind_sum_naive(int64_t p, int64_t q, CwRational **out);

// Dedekind symbol `S(P/Q) = 12·s(P, Q)` of a surgery slope.
//
// # Safety
// `out` must be valid for writing one pointer.
enum CwStatus cw_dedekind_symbol(int64_t slope_p, int64_t slope_q, CwRational **out);

// Casson-Walker invariant of `P/Q`-surgery on a knot with second Conway
// coefficient `a2`.
//
// # Safety
// `out` must be valid for writing one pointer.
enum CwStatus cw_lambda_knot(int64_t a2, int64_t slope_p, int64_t slope_q, CwRational **out);

// Casson-Walker invariant of surgery on a two-component link. `json_in`
// describes the link (fields `a2x`, `a2y`, `a3`, `lk`, `fx`, `fy`);
// `out_json` receives the full term-by-term breakdown including
// `lambda`.
//
// # Safety
// `json_in` must be a valid NUL-terminated string; `out_json` must be
// valid for writing one pointer.
enum CwStatus cw_lambda_link_json(const char *json_in, char **out_json);

// Second Conway coefficient of the torus knot `T(r, s)`.
//
// # Safety
// `out` must be valid for writing one i64.
enum CwStatus cw_torus_knot_a2(int64_t r, int64_t s, int64_t *out);

// Runs the obstruction ladder on one slope; `out_json` receives the full
// report (verdict, fired rules, candidates).
//
// # Safety
// `out_json` must be valid for writing one pointer.
enum CwStatus cw_obstruct_slope_json(int64_t p, int64_t q, int64_t n, int64_t l, char **out_json);

// Scans every distance-1 slope residue for `p/q`-surgery; `out_json`
// receives the scan report.
//
// # Safety
// `out_json` must be valid for writing one pointer.
enum CwStatus cw_theorem_scan_json(int64_t p, int64_t q, char **out_json);

// Runs the knot-complement certificate engine; `out_json` receives the
// certificate (issued flag, per-case outcomes).
//
// # Safety
// `out_json` must be valid for writing one pointer.
enum CwStatus cw_certify_json(int64_t p, int64_t q, enum CwManifoldClass class_, char **out_json);

// Runs the bundled ten-knot cosmetic-crossing reproduction; `out_json`
// receives the partition and per-knot reports.
//
// # Safety
// `out_json` must be valid for writing one pointer.
enum CwStatus cw_cosmetic_reproduce_json(char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
