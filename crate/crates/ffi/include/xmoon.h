#ifndef XMOON_H
#define XMOON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible entry point.
 */
typedef enum XmStatus {
  XM_STATUS_OK = 0,
  /*
   A required pointer argument was NULL.
   */
  XM_STATUS_NULL_POINTER = 1,
  /*
   A string argument was not valid UTF-8.
   */
  XM_STATUS_INVALID_UTF8 = 2,
  /*
   An argument was out of range or malformed (including integers).
   */
  XM_STATUS_INVALID_ARGUMENT = 3,
  /*
   Unknown form or lattice name.
   */
  XM_STATUS_UNKNOWN_FORM = 4,
  /*
   The requested coefficient lies beyond the truncation order.
   */
  XM_STATUS_BEYOND_TRUNCATION = 5,
  /*
   The extremal solver rejected its input.
   */
  XM_STATUS_EXTREMAL = 6,
  /*
   A moonshine decomposition failed.
   */
  XM_STATUS_MOONSHINE = 7,
  /*
   An identity failed to parse or evaluate.
   */
  XM_STATUS_IDENTITY = 8,
  /*
   Internal error; the library caught a panic.
   */
  XM_STATUS_PANIC = 99,
} XmStatus;

/*
 Opaque handle to an extremal family `G_k(x)`.
 */
typedef struct XmFamily XmFamily;

/*
 Opaque handle to a truncated integer q-series.
 */
typedef struct XmSeries XmSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string (do not free).
 */
const char *xm_version(void);

/*
 Message for the last failure on this thread, or NULL if the last call
 succeeded. The caller frees the result with [`xm_string_free`].
 */
char *xm_last_error_message(void);

/*
 Release a string returned by this library. NULL is ignored.

 # Safety
 `s` is NULL or was returned by this library and not yet freed.
 */
void xm_string_free(char *s);

/*
 Expand a named form up to `q^order`. Names: `delta`, `e4`, `j` (or `J`,
 zero constant term), `j-classical`, `niemeier:<lattice>`.

 # Safety
 `name` is a NUL-terminated string; `out` is a valid pointer.
 */
enum XmStatus xm_series_form(const char *name, int64_t order, struct XmSeries **out);

/*
 Release a series handle. NULL is ignored.

 # Safety
 `s` is NULL or a live handle from this library.
 */
void xm_series_free(struct XmSeries *s);

/*
 Truncation order of a series in powers of `q` (coefficients are known
 through `q^order`).

 # Safety
 `s` is a live handle; `out` is a valid pointer.
 */
enum XmStatus xm_series_order(const struct XmSeries *s, int64_t *out);

/*
 Coefficient of `q^exponent` as a decimal string.

 # Safety
 `s` is a live handle; `out` is a valid pointer.
 */
enum XmStatus xm_series_coefficient(const struct XmSeries *s, int64_t exponent, char **out);

/*
 Serialize a series as JSON (`{"variable":"q","unit":2,"terms":[...],"order":N}`).

 # Safety
 `s` is a live handle; `out` is a valid pointer.
 */
enum XmStatus xm_series_to_json(const struct XmSeries *s, char **out);

/*
 Build the extremal family `G_k(x)` up to `q^order`, `1 <= k <= 6`,
 `order >= 2`.

 # Safety
 `out` is a valid pointer.
 */
enum XmStatus xm_family_build(uint32_t k, int64_t order, struct XmFamily **out);

/*
 Release a family handle. NULL is ignored.

 # Safety
 `f` is NULL or a live handle from this library.
 */
void xm_family_free(struct XmFamily *f);

/*
 The `q^0` coefficient `g0(x)` as a JSON array of decimal strings, lowest
 degree first (for k=2: `["393192","-48","-1"]`).

 # Safety
 `f` is a live handle; `out` is a valid pointer.
 */
enum XmStatus xm_family_g0(const struct XmFamily *f, char **out);

/*
 Serialize the whole family (g0, symmetric functions, series) as JSON.

 # Safety
 `f` is a live handle; `out` is a valid pointer.
 */
enum XmStatus xm_family_to_json(const struct XmFamily *f, char **out);

/*
 Substitute the integer `x` (decimal string) into the family.

 # Safety
 `f` is a live handle; `x` is a NUL-terminated string; `out` is valid.
 */
enum XmStatus xm_family_specialize(const struct XmFamily *f, const char *x, struct XmSeries **out);

/*
 All integer `x` with `g0(x) = target`, largest first, as a JSON array of
 decimal strings.

 # Safety
 `f` is a live handle; `target` is a NUL-terminated string; `out` is valid.
 */
enum XmStatus xm_family_solve_g0(const struct XmFamily *f, const char *target, char **out);

/*
 Greedy decomposition of a non-negative integer into Monster irreducible
 dimensions, as JSON `{"exponent":null,"coefficient":"…","terms":[[dim,mult],…]}`.

 # Safety
 `value` is a NUL-terminated string; `out` is a valid pointer.
 */
enum XmStatus xm_decompose(const char *value, char **out);

/*
 Run the built-in identity table for `0 <= i <= i_max`. Writes whether
 every row passed and a JSON report `{"all_pass":…,"reports":[…]}`.
 A failing row is not an error: the call still returns `XM_STATUS_OK`.

 # Safety
 `all_pass` and `out_json` are valid pointers.
 */
enum XmStatus xm_verify_builtin(int64_t i_max, bool *all_pass, char **out_json);

/*
 Parse identities (one per line, `#` comments) and run them like
 [`xm_verify_builtin`].

 # Safety
 `text` is a NUL-terminated string; `all_pass` and `out_json` are valid.
 */
enum XmStatus xm_verify_text(const char *text, int64_t i_max, bool *all_pass, char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* XMOON_H */
