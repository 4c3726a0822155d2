#ifndef LMCALC_H
#define LMCALC_H

/* Generated by cbindgen from lmcalc-ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LmSort {
  LM_SORT_TERM = 0,
  LM_SORT_COMMAND = 1,
  LM_SORT_STACK = 2,
} LmSort;

typedef enum LmStatus {
  LM_STATUS_OK = 0,
  LM_STATUS_NULL_ARGUMENT = 1,
  LM_STATUS_INVALID_UTF8 = 2,
  LM_STATUS_PARSE = 3,
  LM_STATUS_SORT = 4,
  LM_STATUS_TYPE = 5,
  LM_STATUS_BUDGET = 6,
  LM_STATUS_NOT_EQUIVALENT = 7,
  LM_STATUS_INTERNAL = 8,
} LmStatus;

/**
 * Opaque handle to a parsed object.
 */
typedef struct LmObject LmObject;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *lm_last_error(void);

/**
 * Parses a term, command or stack.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LmStatus lm_parse(const char *src, struct LmObject **out);

/**
 * Prints an object in the concrete syntax. Free the result with
 * `lm_string_free`.
 *
 * # Safety
 * `obj` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_print(const struct LmObject *obj, char **out);

/**
 * # Safety
 * `obj` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_sort(const struct LmObject *obj, enum LmSort *out);

/**
 * Canonical form, as a new handle.
 *
 * # Safety
 * `obj` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_canon(const struct LmObject *obj, struct LmObject **out);

/**
 * Leftmost-outermost normal form within `budget` steps. `refined`
 * selects the refined replacement rules.
 *
 * # Safety
 * `obj` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_reduce(const struct LmObject *obj,
                        size_t budget,
                        bool refined,
                        struct LmObject **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum LmStatus lm_alpha_eq(const struct LmObject *a, const struct LmObject *b, bool *out);

/**
 * Searches for an equivalence certificate between the canonical forms of
 * `a` and `b`. Returns `LM_STATUS_OK` and the certificate text (one axiom
 * step per line) when one is found, `LM_STATUS_NOT_EQUIVALENT` when the
 * bounds are reached or the search space is exhausted. `certificate` may
 * be NULL.
 *
 * # Safety
 * `a` and `b` must be live handles; `certificate` must be NULL or valid.
 */
enum LmStatus lm_equiv(const struct LmObject *a,
                       const struct LmObject *b,
                       bool include_ren,
                       size_t max_states,
                       size_t max_depth,
                       char **certificate);

/**
 * Typechecks an annotated object under `env` (`x:A, 'a:B -> C`) and
 * returns its judgment.
 *
 * # Safety
 * `obj` must be a live handle, `env` a NUL-terminated string and `out` a
 * valid pointer.
 */
enum LmStatus lm_typecheck(const struct LmObject *obj, const char *env, char **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `obj` must be NULL or a handle not yet freed.
 */
void lm_object_free(struct LmObject *obj);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void lm_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LMCALC_H */
