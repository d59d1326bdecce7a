#ifndef SURFSAT_H
#define SURFSAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Affinisation dimension, i.e. the dimension of `Spec O(X)`.
typedef enum SurfsatAffDim {
  SURFSAT_AFF_DIM_ZERO = 0,
  SURFSAT_AFF_DIM_ONE = 1,
  SURFSAT_AFF_DIM_TWO = 2,
  // One or zero; deciding needs a false-fibre certificate.
  SURFSAT_AFF_DIM_ONE_OR_ZERO = 3,
} SurfsatAffDim;

// Result codes. Non-negative values mirror the CLI exit codes.
typedef enum SurfsatStatus {
  // Definite answer.
  SURFSAT_STATUS_OK = 0,
  // The data are inconsistent. From `surfsat_run_command` this also covers
  // input errors, matching CLI exit code 1.
  SURFSAT_STATUS_INCONSISTENT = 1,
  // The answer depends on information the input does not carry.
  SURFSAT_STATUS_UNDECIDED = 2,
  SURFSAT_STATUS_NULL_POINTER = -1,
  SURFSAT_STATUS_INVALID_UTF8 = -2,
  // Malformed JSON or a schema violation.
  SURFSAT_STATUS_INVALID_INPUT = -3,
  SURFSAT_STATUS_UNKNOWN_COMMAND = -4,
  SURFSAT_STATUS_INVALID_ARGUMENT = -5,
  // A bug in the library; the message carries the panic payload.
  SURFSAT_STATUS_PANIC = -6,
} SurfsatStatus;

// Opaque handle to a parsed surface.
typedef struct SurfsatSurface SurfsatSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a JSON document and stores a new handle in `*out`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum SurfsatStatus surfsat_surface_from_json(const char *json, struct SurfsatSurface **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `surface` must come from [`surfsat_surface_from_json`] and not be freed twice.
void surfsat_surface_free(struct SurfsatSurface *surface);

// Number of curves in the configuration.
//
// # Safety
// `surface` must be a live handle and `out` a valid pointer.
enum SurfsatStatus surfsat_curve_count(const struct SurfsatSurface *surface, size_t *out);

// Whether the boundary has no isolated points and no negative definite component.
//
// # Safety
// `surface` must be a live handle and `out` a valid pointer.
enum SurfsatStatus surfsat_is_saturated(const struct SurfsatSurface *surface, bool *out);

// Affinisation dimension of the surface, saturating it first if needed.
// Returns `Undecided` together with `OneOrZero` when a certificate is missing.
//
// # Safety
// `surface` must be a live handle and `out` a valid pointer.
enum SurfsatStatus surfsat_affinisation_dimension(const struct SurfsatSurface *surface,
                                                  enum SurfsatAffDim *out);

// Runs a CLI command (`analyze`, `saturate`, `affdim`, `fibre`, `mumford`,
// `hironaka`, `validate`) on a JSON document and stores the JSON report in
// `*report`. The status is the command's exit code; the report is produced
// for every non-negative status.
//
// # Safety
// `command` and `json` must be NUL-terminated strings and `report` a valid pointer.
enum SurfsatStatus surfsat_run_command(const char *command, const char *json, char **report);

// Inertia `(positive, negative, zero)` of a symmetric `n × n` integer matrix
// given row-major in `entries`.
//
// # Safety
// `entries` must point to `n * n` values and `out` to three writable `size_t`s.
enum SurfsatStatus surfsat_inertia(const int64_t *entries, size_t n, size_t *out);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void surfsat_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into the library on the same thread.
const char *surfsat_last_error(void);

// Library version as a static string.
const char *surfsat_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURFSAT_H */
