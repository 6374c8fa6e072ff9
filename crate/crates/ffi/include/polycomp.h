#ifndef POLYCOMP_H
#define POLYCOMP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE_ERROR = 3,
  PC_STATUS_NOT_POLYHEDRAL = 4,
  PC_STATUS_OUT_OF_RANGE = 5,
  PC_STATUS_INTERNAL = 6,
} PcStatus;

/**
 * Opaque list of polyhedra.
 */
typedef struct PcCensus PcCensus;

/**
 * Opaque graph handle.
 */
typedef struct PcGraph PcGraph;

typedef struct PcProperties {
  bool planar;
  bool three_connected;
  bool polyhedral;
  bool self_dual;
  bool self_complementary;
} PcProperties;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never NULL; do not free.
 */
const char *pc_status_message(enum PcStatus status);

/**
 * Parses one graph6 line into a new graph handle.
 *
 * # Safety
 * `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
 * or valid for writes.
 */
enum PcStatus pc_graph_from_graph6(const char *text, struct PcGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library that has not been freed.
 */
void pc_graph_free(struct PcGraph *g);

/**
 * Number of vertices; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t pc_graph_order(const struct PcGraph *g);

/**
 * Number of edges; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t pc_graph_size(const struct PcGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live graph handle; `out` must be NULL or valid for
 * writes.
 */
enum PcStatus pc_graph_to_graph6(const struct PcGraph *g, char **out);

/**
 * Hex string of the canonical form; equal strings mean isomorphic graphs.
 *
 * # Safety
 * As for [`pc_graph_to_graph6`].
 */
enum PcStatus pc_graph_certificate_hex(const struct PcGraph *g, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void pc_string_free(char *s);

/**
 * # Safety
 * `g` must be NULL or a live graph handle; `out` must be NULL or valid for
 * writes.
 */
enum PcStatus pc_graph_complement(const struct PcGraph *g, struct PcGraph **out);

/**
 * Dual of a polyhedron; `PC_STATUS_NOT_POLYHEDRAL` otherwise.
 *
 * # Safety
 * As for [`pc_graph_complement`].
 */
enum PcStatus pc_graph_dual(const struct PcGraph *g, struct PcGraph **out);

/**
 * `self_dual` is false for graphs that are not polyhedral.
 *
 * # Safety
 * `g` must be NULL or a live graph handle; `out` must be NULL or valid for
 * writes.
 */
enum PcStatus pc_graph_properties(const struct PcGraph *g, struct PcProperties *out);

/**
 * # Safety
 * `a` and `b` must be NULL or live graph handles; `out` must be NULL or
 * valid for writes.
 */
enum PcStatus pc_graph_is_isomorphic(const struct PcGraph *a, const struct PcGraph *b, bool *out);

/**
 * Polyhedra with `q` edges and, when `p >= 0`, exactly `p` vertices,
 * sorted by canonical form. Sizes below 6 and anything beyond 9 vertices
 * or 14 edges give `PC_STATUS_OUT_OF_RANGE`.
 *
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum PcStatus pc_census_enumerate(uint32_t q, int32_t p, struct PcCensus **out);

/**
 * # Safety
 * `c` must be NULL or a live census handle.
 */
size_t pc_census_len(const struct PcCensus *c);

/**
 * A new graph handle holding a copy of entry `index`.
 *
 * # Safety
 * `c` must be NULL or a live census handle; `out` must be NULL or valid for
 * writes.
 */
enum PcStatus pc_census_get(const struct PcCensus *c, size_t index, struct PcGraph **out);

/**
 * # Safety
 * `c` must be NULL or a census handle from this library, not yet freed.
 */
void pc_census_free(struct PcCensus *c);

/**
 * Runs the classification and returns its report as JSON.
 *
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum PcStatus pc_classify_report_json(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYCOMP_H */
