#ifndef GIRTH7_H
#define GIRTH7_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum G7Status {
  G7_STATUS_OK = 0,
  G7_STATUS_NULL_POINTER = 1,
  G7_STATUS_INVALID_UTF8 = 2,
  G7_STATUS_PARSE_ERROR = 3,
  G7_STATUS_INVALID_ARGUMENT = 4,
  G7_STATUS_DOMAIN_ERROR = 5,
  G7_STATUS_OVERFLOW = 6,
  G7_STATUS_PANIC = 7,
} G7Status;

/**
 * Opaque cubic or general simple graph.
 */
typedef struct G7Graph G7Graph;

/**
 * Opaque classification report.
 */
typedef struct G7Report G7Report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on this thread.
 */
const char *g7_last_error(void);

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum G7Status g7_graph_from_graph6(const char *text, struct G7Graph **out);

/**
 * Encodes a graph as graph6; free the result with [`g7_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum G7Status g7_graph_to_graph6(const struct G7Graph *g, char **out);

/**
 * Builds the graph on `n` vertices from `edges`, a flat array of `2 * m` endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m` is 0).
 */
enum G7Status g7_graph_from_edges(size_t n, const size_t *edges, size_t m, struct G7Graph **out);

/**
 * A(n) for `n >= 8`.
 *
 * # Safety
 * `out` must be writable.
 */
enum G7Status g7_graph_a(size_t n, struct G7Graph **out);

/**
 * Generalized Petersen graph Pet(n, k).
 *
 * # Safety
 * `out` must be writable.
 */
enum G7Status g7_graph_petersen(size_t n, size_t k, struct G7Graph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum G7Status g7_graph_coxeter(struct G7Graph **out);

/**
 * Cayley graph of the order-12i group with signature (4,4,6), `i >= 3`.
 *
 * # Safety
 * `out` must be writable.
 */
enum G7Status g7_graph_cayley446(size_t i, struct G7Graph **out);

/**
 * Skeleton of the rotary {7,3} map on 56 vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum G7Status g7_graph_klein(struct G7Graph **out);

/**
 * Truncation of K_{7,7} under its cyclic scheme.
 *
 * # Safety
 * `out` must be writable.
 */
enum G7Status g7_graph_k77_truncation(struct G7Graph **out);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t g7_graph_order(const struct G7Graph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t g7_graph_size(const struct G7Graph *g);

/**
 * Girth; `DomainError` for forests.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum G7Status g7_girth(const struct G7Graph *g, size_t *out);

/**
 * Common girth signature of a girth-regular cubic graph, sorted ascending.
 *
 * # Safety
 * `g` must be a live handle; `out` must point to 3 writable values.
 */
enum G7Status g7_signature(const struct G7Graph *g, size_t *out);

/**
 * Automorphism group order; `Overflow` if it exceeds 64 bits.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum G7Status g7_automorphism_group_order(const struct G7Graph *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum G7Status g7_is_vertex_transitive(const struct G7Graph *g, bool *out);

/**
 * Whether two graphs are isomorphic.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum G7Status g7_are_isomorphic(const struct G7Graph *a, const struct G7Graph *b, bool *out);

/**
 * Classifies a cubic vertex-transitive graph of girth 7. Preconditions
 * that fail (girth, transitivity, ...) give `DomainError`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum G7Status g7_classify(const struct G7Graph *g, struct G7Report **out);

/**
 * Case number 1..=5 of a report, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
uint32_t g7_report_case(const struct G7Report *r);

/**
 * Report as JSON; free the result with [`g7_string_free`].
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum G7Status g7_report_json(const struct G7Report *r, char **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void g7_graph_free(struct G7Graph *g);

/**
 * # Safety
 * `r` must be null or a handle from this library, not yet freed.
 */
void g7_report_free(struct G7Report *r);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void g7_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GIRTH7_H */
