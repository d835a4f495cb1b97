#ifndef MODULISLOPE_H
#define MODULISLOPE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every function.
typedef enum MsStatus {
  MS_STATUS_OK = 0,
  MS_STATUS_NULL_POINTER = 1,
  MS_STATUS_INVALID_UTF8 = 2,
  MS_STATUS_PARSE = 3,
  MS_STATUS_DOMAIN = 4,
  MS_STATUS_INDETERMINATE = 5,
  // A check ran and failed; not an input error.
  MS_STATUS_CHECK_FAILED = 6,
  MS_STATUS_PANIC = 7,
} MsStatus;

// Opaque divisor class handle.
typedef struct MsClass MsClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread; empty after success.
// The pointer stays valid until the next call into this library on the
// same thread.
const char *ms_last_error_message(void);

// Parses a class from the JSON class format.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid pointer.
enum MsStatus ms_class_from_json(const char *json, struct MsClass **out);

// Looks up a bundled class by keyword (`k3divisor`, `weierstrass:10`, ...).
//
// # Safety
// `name` must be a valid NUL-terminated string and `out` a valid pointer.
enum MsStatus ms_class_from_name(const char *name, struct MsClass **out);

// Releases a class handle. Null is ignored.
//
// # Safety
// `class` must come from this library and not have been freed.
void ms_class_free(struct MsClass *class_);

// Serializes a class to the JSON class format.
//
// # Safety
// `class` must be a live handle and `out` a valid pointer.
enum MsStatus ms_class_to_json(const struct MsClass *class_, char **out);

// Genus of a class.
//
// # Safety
// `class` must be a live handle and `out` a valid pointer.
enum MsStatus ms_class_genus(const struct MsClass *class_, uint32_t *out);

// Slope as `"p/q"` or `"infinity"`.
//
// # Safety
// `class` must be a live handle and `out` a valid pointer.
enum MsStatus ms_class_slope(const struct MsClass *class_, char **out);

// `π_*(X·Y)`. `x` must be a full class on M_g,1; `y` may be partial, in
// which case the result is partial.
//
// # Safety
// `x`, `y` must be live handles and `out` a valid pointer.
enum MsStatus ms_push_quadratic(const struct MsClass *x,
                                const struct MsClass *y,
                                struct MsClass **out);

// Intersection of a test curve (`lefschetz:<i>`, `glued:<i>:<g>`,
// `pointed-k3`) with a class, as `"p/q"`.
//
// # Safety
// `curve` must be a valid NUL-terminated string, `class` a live handle and
// `out` a valid pointer.
enum MsStatus ms_intersect(const char *curve, const struct MsClass *class_, char **out);

// Constants of `b_10 >= alpha·b_0 - beta·a`, as `"p/q"` strings.
//
// # Safety
// `alpha` and `beta` must be valid pointers.
enum MsStatus ms_bound_b10(char **alpha, char **beta);

// Runs every reproduction criterion and writes the JSON report. Returns
// `CheckFailed` (with the report still written) when some criterion fails.
//
// # Safety
// `out` must be a valid pointer.
enum MsStatus ms_verify_all(int decimals, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void ms_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MODULISLOPE_H */
