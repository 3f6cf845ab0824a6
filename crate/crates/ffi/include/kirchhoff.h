#ifndef KIRCHHOFF_H
#define KIRCHHOFF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KcMode {
  KC_MODE_PLAIN = 0,
  KC_MODE_STRICT = 1,
  KC_MODE_HOMOGENEOUS = 2,
  KC_MODE_STRICT_HOMOGENEOUS = 3,
} KcMode;

typedef enum KcStatus {
  KC_STATUS_OK = 0,
  KC_STATUS_NULL_POINTER = 1,
  KC_STATUS_INVALID_UTF8 = 2,
  KC_STATUS_PARSE = 3,
  KC_STATUS_DIMENSION = 4,
  KC_STATUS_PRECONDITION = 5,
  KC_STATUS_GRAPH = 6,
  KC_STATUS_ARITHMETIC = 7,
  KC_STATUS_PANIC = 8,
} KcStatus;

/**
 * Opaque graph handle.
 */
typedef struct KcGraph KcGraph;

/**
 * Opaque polynomial handle.
 */
typedef struct KcPolynomial KcPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failing call on this thread; empty after a
 * success. Valid until the next call on the same thread.
 */
const char *kc_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void kc_string_free(char *s);

/**
 * Builds a graph from `K<m>` or the `p`/`e` text format.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum KcStatus kc_graph_from_spec(const char *spec, struct KcGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, freed once.
 */
void kc_graph_free(struct KcGraph *g);

/**
 * # Safety
 * `g` must be a live handle; the out-pointers must be writable.
 */
enum KcStatus kc_graph_size(const struct KcGraph *g, uintptr_t *vertices, uintptr_t *edges);

/**
 * Number of spanning trees; 0 for a disconnected graph.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KcStatus kc_graph_tree_count(const struct KcGraph *g, uint64_t *out);

/**
 * Kirchhoff polynomial of `g`, one variable per edge.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KcStatus kc_graph_kirchhoff(const struct KcGraph *g, struct KcPolynomial **out);

/**
 * Parses text such as `x1*x2 + 3/2*x3^2`. A negative `num_vars` infers
 * the variable count from the largest index.
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out` must be writable.
 */
enum KcStatus kc_polynomial_parse(const char *source, int64_t num_vars, struct KcPolynomial **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, freed once.
 */
void kc_polynomial_free(struct KcPolynomial *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KcStatus kc_polynomial_num_vars(const struct KcPolynomial *p, uintptr_t *out);

/**
 * Canonical text form; free with [`kc_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KcStatus kc_polynomial_to_string(const struct KcPolynomial *p, char **out);

/**
 * Exact value at a comma-separated rational point, written as `p/q`.
 *
 * # Safety
 * `p` must be a live handle, `point` a NUL-terminated string and `out`
 * writable.
 */
enum KcStatus kc_polynomial_evaluate(const struct KcPolynomial *p, const char *point, char **out);

/**
 * Inertia of the Hessian at `point` (null for all ones).
 *
 * # Safety
 * `p` must be a live handle, `point` null or a NUL-terminated string and
 * the out-pointers writable.
 */
enum KcStatus kc_hessian_inertia(const struct KcPolynomial *p,
                                 const char *point,
                                 uintptr_t *n_plus,
                                 uintptr_t *n_minus,
                                 uintptr_t *n_zero);

/**
 * Log-concavity verdict at `point` (null for all ones). `s` may be null
 * to quantify over the threshold range. `out_json`, when not null,
 * receives the full verdict as JSON.
 *
 * # Safety
 * `p` must be a live handle, string arguments null or NUL-terminated,
 * `verdict` writable.
 */
enum KcStatus kc_check_log_concavity(const struct KcPolynomial *p,
                                     const char *point,
                                     enum KcMode mode,
                                     const char *s,
                                     bool *verdict,
                                     char **out_json);

/**
 * Degree-one strong Lefschetz report as JSON.
 *
 * # Safety
 * `p` must be a live handle, `point` null or NUL-terminated, `out`
 * writable.
 */
enum KcStatus kc_slp_report(const struct KcPolynomial *p,
                            const char *point,
                            bool *slp_holds,
                            char **out_json);

/**
 * Same as [`kc_slp_report`] but also enforces that `g` is simple and
 * connected.
 *
 * # Safety
 * As for [`kc_slp_report`].
 */
enum KcStatus kc_graph_slp_report(const struct KcGraph *g,
                                  const char *point,
                                  bool *slp_holds,
                                  char **out_json);

/**
 * Runs a command-line invocation (`argv[0]` is the program name).
 * Writes the process exit code and the captured stdout and stderr.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; out-pointers writable.
 */
enum KcStatus kc_run(uintptr_t argc,
                     const char *const *argv,
                     int32_t *exit_code,
                     char **out_stdout,
                     char **out_stderr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KIRCHHOFF_H */
