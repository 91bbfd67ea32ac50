#ifndef QTET_H
#define QTET_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QtetStatus {
  QTET_STATUS_OK = 0,
  QTET_STATUS_NULL_ARGUMENT = 1,
  QTET_STATUS_INVALID_UTF8 = 2,
  QTET_STATUS_PARSE = 3,
  QTET_STATUS_PAIR_FILE = 4,
  QTET_STATUS_DOMAIN = 5,
  QTET_STATUS_PRECONDITION = 6,
  QTET_STATUS_STRUCTURAL = 7,
  QTET_STATUS_GENERATION = 8,
  QTET_STATUS_NO_ACTION = 9,
  QTET_STATUS_PANIC = 10,
} QtetStatus;

/**
 * The outcome of the full existence pipeline for one pair.
 */
typedef struct QtetDecision QtetDecision;

/**
 * A verified-shape pair of square matrices over a fixed field.
 */
typedef struct QtetPair QtetPair;

/**
 * Message of the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *qtet_last_error(void);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qtet_string_free(char *s);

/**
 * Parses a pair file in JSON form.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is writable.
 */
enum QtetStatus qtet_pair_from_json(const char *json, struct QtetPair **out);

/**
 * Generates a verified q-geometric pair of diameter `d`, or the q-mixed
 * pair derived from it when `c` is non-NULL. `q` selects a rational
 * specialization; NULL means symbolic.
 *
 * # Safety
 * `c` and `q` are NULL or NUL-terminated; `out` is writable.
 */
enum QtetStatus qtet_pair_generate(size_t d, const char *c, const char *q, struct QtetPair **out);

/**
 * Dimension of the underlying space; 0 for NULL.
 *
 * # Safety
 * `pair` is NULL or a live handle.
 */
size_t qtet_pair_dimension(const struct QtetPair *pair);

/**
 * The pair as a pair-file JSON string.
 *
 * # Safety
 * `pair` is a live handle; `out` is writable.
 */
enum QtetStatus qtet_pair_to_json(const struct QtetPair *pair, char **out);

/**
 * # Safety
 * `pair` is NULL or a live handle, not used afterwards.
 */
void qtet_pair_free(struct QtetPair *pair);

/**
 * Runs the existence pipeline on a q-mixed pair.
 *
 * # Safety
 * `pair` is a live handle; `out` is writable.
 */
enum QtetStatus qtet_decide(const struct QtetPair *pair, struct QtetDecision **out);

/**
 * Whether the module exists.
 *
 * # Safety
 * `decision` is a live handle; `out` is writable.
 */
enum QtetStatus qtet_decision_exists(const struct QtetDecision *decision, bool *out);

/**
 * Whether every cross-check and relation passed.
 *
 * # Safety
 * `decision` is a live handle; `out` is writable.
 */
enum QtetStatus qtet_decision_consistent(const struct QtetDecision *decision, bool *out);

/**
 * The full decision record as JSON.
 *
 * # Safety
 * `decision` is a live handle; `out` is writable.
 */
enum QtetStatus qtet_decision_to_json(const struct QtetDecision *decision, char **out);

/**
 * The constructed action as JSON; `QTET_STATUS_NO_ACTION` when the module
 * does not exist.
 *
 * # Safety
 * `decision` is a live handle; `out` is writable.
 */
enum QtetStatus qtet_decision_action_json(const struct QtetDecision *decision, char **out);

/**
 * # Safety
 * `decision` is NULL or a live handle, not used afterwards.
 */
void qtet_decision_free(struct QtetDecision *decision);

/**
 * Normal form of an element literal. `alpha` NULL means
 * `q^{-4}(q-q^{-1})^3[3]!`; `q` NULL means symbolic.
 *
 * # Safety
 * `element` is NUL-terminated; `alpha`, `q` are NULL or NUL-terminated;
 * `out` is writable.
 */
enum QtetStatus qtet_words_reduce(const char *element,
                                  const char *alpha,
                                  const char *q,
                                  char **out);

#endif  /* QTET_H */
