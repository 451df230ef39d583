#ifndef MLQ_H
#define MLQ_H

/* Generated by cbindgen from src/lib.rs. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define MLQ_METHOD_DIRECT 0

#define MLQ_METHOD_PROJECTION 1

#define MLQ_METHOD_CLOSED 2

typedef enum MlqStatus {
  MLQ_STATUS_OK = 0,
  MLQ_STATUS_NULL_POINTER = 1,
  MLQ_STATUS_INVALID_ARGUMENT = 2,
  MLQ_STATUS_PARSE = 3,
  MLQ_STATUS_GUARD_EXCEEDED = 4,
  MLQ_STATUS_DOMAIN = 5,
  MLQ_STATUS_UNKNOWN_FORMULA = 6,
  MLQ_STATUS_BUFFER_TOO_SMALL = 7,
  MLQ_STATUS_IO = 8,
  MLQ_STATUS_PANIC = 9,
} MlqStatus;

// Exact correlation table `c_{i,j}`.
typedef struct MlqCorrelations MlqCorrelations;

// A discrete multiline queue on a ring of sites.
typedef struct MlqDiscrete MlqDiscrete;

// Enumeration engine: worker pool and size guard.
typedef struct MlqEngine MlqEngine;

// A continuous multiline queue.
typedef struct MlqPlacement MlqPlacement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer is
// valid until the next call into this library from the same thread.
const char *mlq_last_error_message(void);

// Library version as a static string.
const char *mlq_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void mlq_string_free(char *s);

// Creates an engine. `workers == 0` uses the available parallelism and
// `guard == 0` reads the guard from the environment.
//
// # Safety
// `out` must be a valid pointer.
enum MlqStatus mlq_engine_new(size_t workers, size_t guard, struct MlqEngine **out);

// # Safety
// `engine` must come from [`mlq_engine_new`] and not have been freed.
void mlq_engine_free(struct MlqEngine *engine);

// Parses a continuous queue: one row per line, entries separated by spaces.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum MlqStatus mlq_placement_parse(const char *text, struct MlqPlacement **out);

// Builds a continuous queue from `rows` row lengths and the concatenated
// row entries.
//
// # Safety
// `lengths` must point to `rows` values and `entries` to their sum.
enum MlqStatus mlq_placement_from_rows(const uint32_t *entries,
                                       const size_t *lengths,
                                       size_t rows,
                                       struct MlqPlacement **out);

// # Safety
// `p` must come from this library and not have been freed.
void mlq_placement_free(struct MlqPlacement *p);

// Projects a continuous queue. The word length is always stored in
// `out_len`; if `cap` is too small nothing is copied and
// `MLQ_STATUS_BUFFER_TOO_SMALL` is returned.
//
// # Safety
// `p` must be a live handle, `buf` must hold `cap` values.
enum MlqStatus mlq_project(const struct MlqPlacement *p,
                           uint32_t *buf,
                           size_t cap,
                           size_t *out_len);

// Parses a discrete queue: one row per line, `x` occupied, `.` empty.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum MlqStatus mlq_discrete_parse(const char *text, struct MlqDiscrete **out);

// # Safety
// `q` must come from this library and not have been freed.
void mlq_discrete_free(struct MlqDiscrete *q);

// Projects a discrete queue; empty sites get label `species + 1`.
//
// # Safety
// As for [`mlq_project`].
enum MlqStatus mlq_project_discrete(const struct MlqDiscrete *q,
                                    uint32_t *buf,
                                    size_t cap,
                                    size_t *out_len);

// Evaluates a registered formula. The value is written as `"p/q"`.
//
// # Safety
// `id` must be a NUL-terminated string, `args` must hold `nargs` values.
enum MlqStatus mlq_formula_evaluate(const char *id,
                                    const int64_t *args,
                                    size_t nargs,
                                    char **out_value);

// Computes `c_{i,j}` for labels `1..=n` with one of the `MLQ_METHOD_*`
// methods.
//
// # Safety
// `engine` must be a live handle and `out` a valid pointer.
enum MlqStatus mlq_correlations(const struct MlqEngine *engine,
                                size_t n,
                                uint32_t method,
                                struct MlqCorrelations **out);

// Reads `c_{i,j}` from a table as `"p/q"`.
//
// # Safety
// `table` must be a live handle and `out_value` a valid pointer.
enum MlqStatus mlq_correlations_get(const struct MlqCorrelations *table,
                                    size_t i,
                                    size_t j,
                                    char **out_value);

// # Safety
// `table` must come from this library and not have been freed.
void mlq_correlations_free(struct MlqCorrelations *table);

// Runs a verification suite (`theorems`, `lemmas`, `conjectures` or
// `all`) up to `max_total` entries. `out_passed` receives 1 if every gate
// check agreed; `out_report`, if not null, receives the JSON report.
//
// # Safety
// `engine` must be a live handle, `suite` a NUL-terminated string and
// `out_passed` a valid pointer.
enum MlqStatus mlq_verify(const struct MlqEngine *engine,
                          const char *suite,
                          size_t max_total,
                          int32_t *out_passed,
                          char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MLQ_H */
