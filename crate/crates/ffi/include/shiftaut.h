#ifndef SHIFTAUT_H
#define SHIFTAUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum ShiftautStatus {
  SHIFTAUT_STATUS_OK = 0,
  SHIFTAUT_STATUS_NULL_ARGUMENT = 1,
  SHIFTAUT_STATUS_INVALID_UTF8 = 2,
  SHIFTAUT_STATUS_INVALID_SPEC = 3,
  SHIFTAUT_STATUS_DEPTH_EXCEEDED = 4,
  SHIFTAUT_STATUS_WORD_NOT_IN_LANGUAGE = 5,
  SHIFTAUT_STATUS_BUDGET_EXCEEDED = 6,
  SHIFTAUT_STATUS_INVALID_ARGUMENT = 7,
  SHIFTAUT_STATUS_INTERNAL = 8,
} ShiftautStatus;

/**
 * A language table.
 */
typedef struct ShiftautTable ShiftautTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *shiftaut_last_error(void);

/**
 * Builds the language table of a JSON shift spec up to word length `max_n`.
 *
 * # Safety
 * `spec_json` must be a NUL-terminated string and `out` a valid pointer to
 * writable storage for one handle.
 */
enum ShiftautStatus shiftaut_table_new(const char *spec_json,
                                       uintptr_t max_n,
                                       struct ShiftautTable **out);

/**
 * Releases a table. NULL is ignored.
 *
 * # Safety
 * `t` must come from [`shiftaut_table_new`] and not have been freed.
 */
void shiftaut_table_free(struct ShiftautTable *t);

/**
 * Largest word length stored in the table, or 0 for NULL.
 *
 * # Safety
 * `t` must be NULL or a live table handle.
 */
uintptr_t shiftaut_table_max_n(const struct ShiftautTable *t);

/**
 * Writes `P(n)`, the number of words of length `n`.
 *
 * # Safety
 * `t` must be a live table handle and `out` valid for writing.
 */
enum ShiftautStatus shiftaut_table_complexity(const struct ShiftautTable *t,
                                              uintptr_t n,
                                              uintptr_t *out);

/**
 * Writes whether `word` (in the spec's token syntax) is in the language.
 *
 * # Safety
 * `t` must be a live table handle, `word` NUL-terminated, `out` valid for writing.
 */
enum ShiftautStatus shiftaut_table_contains(const struct ShiftautTable *t,
                                            const char *word,
                                            bool *out);

/**
 * The table in the text cache format.
 *
 * # Safety
 * `t` must be a live table handle and `out` valid for writing. The string
 * written to `out` must be released with [`shiftaut_string_free`].
 */
enum ShiftautStatus shiftaut_table_cache_string(const struct ShiftautTable *t, char **out);

/**
 * Complexity profile as JSON: `values`, `differences`, `B`, `k_linear`, `max_n`.
 *
 * # Safety
 * As for [`shiftaut_table_cache_string`].
 */
enum ShiftautStatus shiftaut_profile_json(const struct ShiftautTable *t, char **out);

/**
 * Automorphism search report as JSON. `budget` 0 selects the default.
 *
 * # Safety
 * As for [`shiftaut_table_cache_string`].
 */
enum ShiftautStatus shiftaut_aut_report_json(const struct ShiftautTable *t,
                                             uintptr_t range,
                                             uintptr_t inv_range,
                                             uintptr_t horizon,
                                             uint64_t budget,
                                             char **out);

/**
 * Group structure of a periodic spec as JSON: `factors`, `order`, and
 * `full_group` when the shift has at most 12 points.
 *
 * # Safety
 * `spec_json` must be NUL-terminated and `out` valid for writing. The string
 * written to `out` must be released with [`shiftaut_string_free`].
 */
enum ShiftautStatus shiftaut_classify_json(const char *spec_json, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void shiftaut_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHIFTAUT_H */
