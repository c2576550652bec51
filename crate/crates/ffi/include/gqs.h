#ifndef GQS_H
#define GQS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum GqsStatus {
  GQS_STATUS_OK = 0,
  GQS_STATUS_NULL_POINTER = 1,
  GQS_STATUS_INVALID_UTF8 = 2,
  GQS_STATUS_UNKNOWN_SYSTEM = 3,
  GQS_STATUS_INVALID_MARKS = 4,
  GQS_STATUS_INVALID_ALPHA = 5,
  GQS_STATUS_OUT_OF_RANGE = 6,
  GQS_STATUS_VERIFICATION_FAILED = 7,
  GQS_STATUS_INTERNAL = 8,
  GQS_STATUS_PANIC = 9,
} GqsStatus;

/*
 One grading with its level decomposition.
 */
typedef struct GqsGrading GqsGrading;

/*
 Root system of one algebra.
 */
typedef struct GqsRootSystem GqsRootSystem;

/*
 Normalized structure table of D(2,1;alpha).
 */
typedef struct GqsStructureTable GqsStructureTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. Valid until the
 next call on the same thread.
 */
const char *gqs_last_error(void);

/*
 Library version as a static string.
 */
const char *gqs_version(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void gqs_string_free(char *s);

/*
 Looks up the root system named `name` (G2, F4, E6, E7, E8, D21A, G3, F4S).

 # Safety
 `name` must be a NUL-terminated string and `out` writable.
 */
enum GqsStatus gqs_root_system_new(const char *name, struct GqsRootSystem **out);

/*
 # Safety
 `h` must come from [`gqs_root_system_new`] and not have been freed.
 */
void gqs_root_system_free(struct GqsRootSystem *h);

/*
 Rank and numbers of even and odd roots.

 # Safety
 `h` must be a live handle and the output pointers writable.
 */
enum GqsStatus gqs_root_system_counts(const struct GqsRootSystem *h,
                                      size_t *rank,
                                      size_t *even,
                                      size_t *odd);

/*
 Root listing as JSON.

 # Safety
 `h` must be a live handle and `out` writable.
 */
enum GqsStatus gqs_root_system_json(const struct GqsRootSystem *h, char **out);

/*
 Classification of the length-3 and length-5 gradings of `name` as JSON,
 with the number of classes in `count`.

 # Safety
 `name` must be a NUL-terminated string and the output pointers writable.
 */
enum GqsStatus gqs_classify_json(const char *name, size_t *count, char **out);

/*
 Grading of `name` given by `len` marks on the simple roots.

 # Safety
 `marks` must point to `len` readable integers and `out` be writable.
 */
enum GqsStatus gqs_grading_new(const char *name,
                               const int32_t *marks,
                               size_t len,
                               struct GqsGrading **out);

/*
 # Safety
 `h` must come from [`gqs_grading_new`] and not have been freed.
 */
void gqs_grading_free(struct GqsGrading *h);

/*
 Admissibility, length (3 or 5, 0 if not admissible) and consistency.

 # Safety
 `h` must be a live handle and the output pointers writable.
 */
enum GqsStatus gqs_grading_info(const struct GqsGrading *h,
                                bool *admissible,
                                uint8_t *length,
                                bool *consistent);

/*
 Even and odd root counts at `level` in [-2, 2].

 # Safety
 `h` must be a live handle and the output pointers writable.
 */
enum GqsStatus gqs_grading_level_dims(const struct GqsGrading *h,
                                      int32_t level,
                                      size_t *even,
                                      size_t *odd);

/*
 Levels and module components as JSON.

 # Safety
 `h` must be a live handle and `out` writable.
 */
enum GqsStatus gqs_grading_json(const struct GqsGrading *h, char **out);

/*
 Builds the normalized D(2,1;alpha) table; `alpha` is an integer or `p/q`.

 # Safety
 `alpha` must be a NUL-terminated string and `out` writable.
 */
enum GqsStatus gqs_d21a_new(const char *alpha, struct GqsStructureTable **out);

/*
 # Safety
 `h` must come from [`gqs_d21a_new`] and not have been freed.
 */
void gqs_d21a_free(struct GqsStructureTable *h);

/*
 Dimension of the table (17).

 # Safety
 `h` must be a live handle and `dim` writable.
 */
enum GqsStatus gqs_d21a_dim(const struct GqsStructureTable *h, size_t *dim);

/*
 Coefficient of basis element `k` in `[b_i, b_j]`, as exact `p/q` text.

 # Safety
 `h` must be a live handle and `out` writable.
 */
enum GqsStatus gqs_d21a_structure_constant(const struct GqsStructureTable *h,
                                           size_t i,
                                           size_t j,
                                           size_t k,
                                           char **out);

/*
 Counts super-Jacobi violations and failed relation instances. Returns
 `VerificationFailed` when either is nonzero.

 # Safety
 `h` must be a live handle and the output pointers writable.
 */
enum GqsStatus gqs_d21a_check(const struct GqsStructureTable *h,
                              size_t *jacobi_violations,
                              size_t *failed_relations);

/*
 Basis, weights and brackets as JSON.

 # Safety
 `h` must be a live handle and `out` writable.
 */
enum GqsStatus gqs_d21a_json(const struct GqsStructureTable *h, char **out);

/*
 Full verification against the embedded reference tables. Writes the
 report as JSON and returns `VerificationFailed` if any check failed.

 # Safety
 `out` must be writable.
 */
enum GqsStatus gqs_verify_json(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GQS_H */
