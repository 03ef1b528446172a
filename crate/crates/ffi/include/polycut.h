#ifndef POLYCUT_H
#define POLYCUT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PolycutStatus {
  POLYCUT_STATUS_OK = 0,
  POLYCUT_STATUS_NULL_POINTER = 1,
  POLYCUT_STATUS_INVALID_ARGUMENT = 2,
  POLYCUT_STATUS_PARSE_ERROR = 3,
  POLYCUT_STATUS_INVALID_COMPLEX = 4,
  /**
   * The requested object does not exist, e.g. a nontrivial cut of a
   * graph with fewer than four vertices.
   */
  POLYCUT_STATUS_NOT_FOUND = 5,
  POLYCUT_STATUS_PANIC = 99,
} PolycutStatus;

/**
 * Boundary complex of a simplicial polytope.
 */
typedef struct PolycutComplex PolycutComplex;

/**
 * Edge cut with its canonical side.
 */
typedef struct PolycutCut PolycutCut;

/**
 * Simple undirected graph.
 */
typedef struct PolycutGraph PolycutGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *polycut_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void polycut_string_free(char *s);

/**
 * Boundary of the `d`-simplex.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PolycutStatus polycut_simplex(size_t d, struct PolycutComplex **out);

/**
 * Cyclic `d`-polytope on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PolycutStatus polycut_cyclic(size_t d, size_t n, struct PolycutComplex **out);

/**
 * Stacked `d`-polytope on `2d` vertices with disjoint facets
 * `{0..d-1}` and `{d..2d-1}`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PolycutStatus polycut_ladder_stacked(size_t d, struct PolycutComplex **out);

/**
 * The `C # S # C` polytope for `d >= 4`. When `left_out` is not null it
 * receives the first copy of `C` as a cut certificate.
 *
 * # Safety
 * `out` must be a valid pointer; `left_out` may be null.
 */
enum PolycutStatus polycut_waist(size_t d,
                                 struct PolycutComplex **out,
                                 struct PolycutCut **left_out);

/**
 * Random plane triangulation on `v` vertices after up to `flips` flips.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PolycutStatus polycut_plane_triangulation(size_t v,
                                               size_t flips,
                                               uint64_t seed,
                                               struct PolycutComplex **out);

/**
 * Parses the JSON complex format `{"dim":d,"n":n,"facets":[[...],...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be a valid pointer.
 */
enum PolycutStatus polycut_complex_from_json(const char *json, struct PolycutComplex **out);

/**
 * Canonical JSON of `c`; release with [`polycut_string_free`].
 *
 * # Safety
 * `c` must be a live complex; `out` must be a valid pointer.
 */
enum PolycutStatus polycut_complex_to_json(const struct PolycutComplex *c, char **out);

/**
 * Non-zero when `c` passes structural validation. Null gives 0.
 *
 * # Safety
 * `c` must be null or a live complex.
 */
bool polycut_complex_is_valid(const struct PolycutComplex *c);

/**
 * # Safety
 * `c` must be null or a live complex.
 */
size_t polycut_complex_dim(const struct PolycutComplex *c);

/**
 * # Safety
 * `c` must be null or a live complex.
 */
size_t polycut_complex_vertex_count(const struct PolycutComplex *c);

/**
 * # Safety
 * `c` must be null or a live complex.
 */
size_t polycut_complex_facet_count(const struct PolycutComplex *c);

/**
 * Edge graph of a valid complex.
 *
 * # Safety
 * `c` must be a live complex; `out` must be a valid pointer.
 */
enum PolycutStatus polycut_complex_skeleton(const struct PolycutComplex *c,
                                            struct PolycutGraph **out);

/**
 * # Safety
 * `c` must be null or a complex from this library, not yet freed.
 */
void polycut_complex_free(struct PolycutComplex *c);

/**
 * Graph on `n` vertices from `m` edges stored as `2m` consecutive
 * endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` values (or be null when `m = 0`); `out`
 * must be a valid pointer.
 */
enum PolycutStatus polycut_graph_from_edges(size_t n,
                                            const size_t *edges,
                                            size_t m,
                                            struct PolycutGraph **out);

/**
 * # Safety
 * `g` must be null or a live graph.
 */
size_t polycut_graph_vertex_count(const struct PolycutGraph *g);

/**
 * # Safety
 * `g` must be null or a live graph.
 */
size_t polycut_graph_edge_count(const struct PolycutGraph *g);

/**
 * # Safety
 * `g` must be null or a live graph.
 */
size_t polycut_graph_min_degree(const struct PolycutGraph *g);

/**
 * # Safety
 * `g` must be null or a graph from this library, not yet freed.
 */
void polycut_graph_free(struct PolycutGraph *g);

/**
 * Global minimum cut of a connected graph.
 *
 * # Safety
 * `g` must be a live graph; `out` must be a valid pointer.
 */
enum PolycutStatus polycut_global_min_cut(const struct PolycutGraph *g, struct PolycutCut **out);

/**
 * Minimum cut with at least two vertices on each side;
 * `POLYCUT_STATUS_NOT_FOUND` for graphs with fewer than four vertices.
 *
 * # Safety
 * `g` must be a live graph; `out` must be a valid pointer.
 */
enum PolycutStatus polycut_min_nontrivial_cut(const struct PolycutGraph *g,
                                              struct PolycutCut **out);

/**
 * # Safety
 * `cut` must be null or a live cut.
 */
size_t polycut_cut_size(const struct PolycutCut *cut);

/**
 * # Safety
 * `cut` must be null or a live cut.
 */
bool polycut_cut_is_trivial(const struct PolycutCut *cut);

/**
 * Number of vertices on the canonical side.
 *
 * # Safety
 * `cut` must be null or a live cut.
 */
size_t polycut_cut_side_len(const struct PolycutCut *cut);

/**
 * Copies the canonical side into `buf`, which holds `len` entries;
 * `len` must be at least [`polycut_cut_side_len`].
 *
 * # Safety
 * `cut` must be a live cut; `buf` must be writable for `len` values.
 */
enum PolycutStatus polycut_cut_side(const struct PolycutCut *cut, size_t *buf, size_t len);

/**
 * Canonical JSON of the cut; release with [`polycut_string_free`].
 *
 * # Safety
 * `cut` must be a live cut; `out` must be a valid pointer.
 */
enum PolycutStatus polycut_cut_to_json(const struct PolycutCut *cut, char **out);

/**
 * # Safety
 * `cut` must be null or a cut from this library, not yet freed.
 */
void polycut_cut_free(struct PolycutCut *cut);

/**
 * Runs the waist-construction check for dimension `d`. `passed` receives
 * the verdict; `report_json`, when not null, receives the full report.
 *
 * # Safety
 * `passed` must be a valid pointer; `report_json` may be null.
 */
enum PolycutStatus polycut_verify_waist(size_t d, bool *passed, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYCUT_H */
