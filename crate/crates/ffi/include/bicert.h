#ifndef BICERT_H
#define BICERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum BicertStatus {
  BICERT_STATUS_OK = 0,
  BICERT_STATUS_NULL_POINTER = 1,
  BICERT_STATUS_INVALID_INPUT = 2,
  BICERT_STATUS_PARSE = 3,
  BICERT_STATUS_TOO_LARGE = 4,
  /**
   * The requested certificate is not the kind this outcome holds.
   */
  BICERT_STATUS_WRONG_OUTCOME = 5,
  BICERT_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A checker produced a certificate its verifier rejected.
   */
  BICERT_STATUS_INVARIANT = 7,
  BICERT_STATUS_PANIC = 8,
} BicertStatus;

typedef enum BicertFormat {
  BICERT_FORMAT_EDGE_LIST = 0,
  BICERT_FORMAT_DIMACS = 1,
} BicertFormat;

typedef enum BicertGenKind {
  BICERT_GEN_KIND_RANDOM = 0,
  BICERT_GEN_KIND_PLANTED_BIPARTITE = 1,
  BICERT_GEN_KIND_PLANTED_ODD_CYCLE = 2,
  BICERT_GEN_KIND_FOREST = 3,
} BicertGenKind;

typedef enum BicertAlgorithm {
  BICERT_ALGORITHM_GROWTH = 0,
  BICERT_ALGORITHM_FLIP = 1,
  BICERT_ALGORITHM_DSU = 2,
  BICERT_ALGORITHM_FOREST = 3,
} BicertAlgorithm;

/**
 * Opaque graph handle.
 */
typedef struct BicertGraph BicertGraph;

/**
 * Opaque checker result handle.
 */
typedef struct BicertOutcome BicertOutcome;

/**
 * Generator parameters. `n` applies to random and forest graphs, `left`
 * and `right` to planted ones. Edge density is `p` when `use_probability`
 * is set, otherwise `m`.
 */
typedef struct BicertGenSpec {
  enum BicertGenKind kind;
  size_t n;
  size_t left;
  size_t right;
  size_t m;
  double p;
  bool use_probability;
  size_t cycle_len;
  bool allow_loops;
  bool allow_multi;
  uint64_t seed;
} BicertGenSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *bicert_last_error_message(void);

/**
 * Builds a graph with `n` vertices and edges `(us[i], vs[i])` for `i < m`.
 *
 * # Safety
 * `us` and `vs` must point to `m` readable elements (or be null when
 * `m == 0`); `out` must be writable.
 */
enum BicertStatus bicert_graph_new(size_t n,
                                   const size_t *us,
                                   const size_t *vs,
                                   size_t m,
                                   struct BicertGraph **out);

/**
 * Parses a NUL-terminated UTF-8 graph description.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum BicertStatus bicert_graph_parse(const char *text,
                                     enum BicertFormat format,
                                     struct BicertGraph **out);

/**
 * Generates a seeded graph.
 *
 * # Safety
 * `spec` must be readable and `out` writable.
 */
enum BicertStatus bicert_generate(const struct BicertGenSpec *spec, struct BicertGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle from this library not yet freed.
 */
void bicert_graph_free(struct BicertGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t bicert_graph_vertex_count(const struct BicertGraph *graph);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t bicert_graph_edge_count(const struct BicertGraph *graph);

/**
 * Runs one checker and verifies its certificate.
 *
 * # Safety
 * `graph` must be a live handle and `out` writable.
 */
enum BicertStatus bicert_check(const struct BicertGraph *graph,
                               enum BicertAlgorithm algorithm,
                               struct BicertOutcome **out);

/**
 * # Safety
 * `outcome` must be null or a handle from this library not yet freed.
 */
void bicert_outcome_free(struct BicertOutcome *outcome);

/**
 * True when the outcome holds a bipartition; false for an odd cycle or a
 * null handle.
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
bool bicert_outcome_is_bipartite(const struct BicertOutcome *outcome);

/**
 * Work counter reported by the checker.
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
uint64_t bicert_outcome_ops(const struct BicertOutcome *outcome);

/**
 * Copies one side bit per vertex (0 or 1) into `sides`, which must hold
 * at least the graph's vertex count.
 *
 * # Safety
 * `outcome` must be a live handle; `sides` must point to `len` writable
 * bytes.
 */
enum BicertStatus bicert_outcome_sides(const struct BicertOutcome *outcome,
                                       uint8_t *sides,
                                       size_t len);

/**
 * Length of the odd cycle, or 0 for a bipartition or null handle.
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
size_t bicert_outcome_cycle_len(const struct BicertOutcome *outcome);

/**
 * Copies the cycle's vertices and edge ids. Either buffer may be null to
 * skip it; non-null buffers must hold at least the cycle length.
 *
 * # Safety
 * `outcome` must be a live handle; non-null buffers must point to `len`
 * writable elements.
 */
enum BicertStatus bicert_outcome_cycle(const struct BicertOutcome *outcome,
                                       size_t *vertices,
                                       size_t *edge_ids,
                                       size_t len);

/**
 * Renders the graph with the outcome's certificate as Graphviz DOT. The
 * string must be released with [`bicert_string_free`].
 *
 * # Safety
 * `graph` and `outcome` must be live handles, the outcome computed for
 * this graph; `out` must be writable.
 */
enum BicertStatus bicert_write_dot(const struct BicertGraph *graph,
                                   const struct BicertOutcome *outcome,
                                   char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void bicert_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICERT_H */
