#ifndef FOFNET_H
#define FOFNET_H

/* Generated from the fofnet-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every FFI call. Values are stable; additions only append.
 */
typedef enum FofStatus {
  FOF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FOF_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  FOF_STATUS_INVALID_UTF8 = 2,
  /**
   * Edge-list text failed to parse.
   */
  FOF_STATUS_PARSE_ERROR = 3,
  /**
   * A node id was outside the graph.
   */
  FOF_STATUS_OUT_OF_RANGE = 4,
  /**
   * The requested statistic does not exist for this input, such as a
   * local mean of an isolated node.
   */
  FOF_STATUS_UNDEFINED = 5,
  /**
   * The graph has no edges, so degree-weighted means do not exist.
   */
  FOF_STATUS_NO_EDGES = 6,
  /**
   * A numeric argument violated the documented range.
   */
  FOF_STATUS_INVALID_ARGUMENT = 7,
  /**
   * An exact rational did not fit the 64-bit fields of the output.
   */
  FOF_STATUS_OVERFLOW = 8,
  /**
   * Unexpected internal failure.
   */
  FOF_STATUS_INTERNAL = 9,
} FofStatus;

/**
 * Opaque undirected graph handle.
 */
typedef struct FofGraph FofGraph;

/**
 * Exact rational as a reduced 64-bit fraction.
 */
typedef struct FofRational {
  int64_t numer;
  int64_t denom;
} FofRational;

/**
 * Graph-level paradox metrics; rationals are exact and reduced.
 */
typedef struct FofParadoxSummary {
  struct FofRational mean_degree;
  struct FofRational global_ff_mean;
  struct FofRational degree_variance;
  struct FofRational gap;
  uint64_t nodes_greater;
  uint64_t nodes_equal;
  uint64_t nodes_less;
  uint64_t nodes_undefined;
} FofParadoxSummary;

/**
 * Five-number style summary of a real-valued sequence.
 */
typedef struct FofDistributionSummary {
  uint64_t count;
  double mean;
  double median;
  double std_dev;
  /**
   * `std_dev - |mean - median|`; non-negative for every sequence.
   */
  double mallows_slack;
  /**
   * 0 right-skewed, 1 left-skewed, 2 symmetric.
   */
  int32_t skew_direction;
} FofDistributionSummary;

/**
 * One-sided tail bound at the reflected threshold `2*mean - median`.
 */
typedef struct FofTailBound {
  double alpha;
  double threshold;
  double bound;
  /**
   * Observed tail fraction; NaN when no sample was supplied.
   */
  double empirical;
} FofTailBound;

/**
 * Generator parameters, mirroring the core config field for field.
 */
typedef struct FofGeneratorConfig {
  uint64_t n_individuals;
  double edge_prob;
  uint64_t n_institutions;
  double institution_attach_prob;
  double dormant_fraction;
  double dormant_activity;
  uint64_t seed;
} FofGeneratorConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses edge-list text into a new graph handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to writable
 * memory for one pointer.
 */
enum FofStatus fof_graph_parse(const char *text, struct FofGraph **out);

/**
 * Releases a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must have come from this library and not be freed twice.
 */
void fof_graph_free(struct FofGraph *g);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must have come from this library and not be freed twice.
 */
void fof_string_free(char *s);

/**
 * Writes the node count.
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_graph_node_count(const struct FofGraph *g, uint64_t *out);

/**
 * Writes the edge count.
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_graph_edge_count(const struct FofGraph *g, uint64_t *out);

/**
 * Writes the degree of `node`.
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_graph_degree(const struct FofGraph *g, uint32_t node, uint64_t *out);

/**
 * Writes the canonical edge-list text; release with [`fof_string_free`].
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_graph_to_edge_list(const struct FofGraph *g, char **out);

/**
 * Writes the friends-of-friends count of `node`: the summed degrees of
 * its neighbors.
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_friends_of_friends(const struct FofGraph *g, uint32_t node, uint64_t *out);

/**
 * Writes the exact local mean friends-of-friends of `node`. Isolated
 * nodes yield [`FofStatus::Undefined`].
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_local_ff_mean(const struct FofGraph *g, uint32_t node, struct FofRational *out);

/**
 * Writes the graph-level paradox summary. Graphs without edges yield
 * [`FofStatus::NoEdges`].
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum FofStatus fof_paradox_summary(const struct FofGraph *g, struct FofParadoxSummary *out);

/**
 * Summarizes `len` finite values.
 *
 * # Safety
 * `values` must point to `len` readable doubles; `out` must be writable.
 */
enum FofStatus fof_summarize(const double *values, size_t len, struct FofDistributionSummary *out);

/**
 * Writes the one-sided tail bound for a right-skewed distribution with
 * the given moments. `values` may be null (`len` 0) to skip the
 * empirical comparison; otherwise the observed tail fraction of the
 * sample is reported.
 *
 * # Safety
 * `values` must point to `len` readable doubles or be null; `out` must
 * be writable.
 */
enum FofStatus fof_tail_bound(double mean,
                              double median,
                              double sigma,
                              const double *values,
                              size_t len,
                              struct FofTailBound *out);

/**
 * Solves the crossing of a falling demand line and a rising supply
 * line; writes the equilibrium friend count and cost. `factor` scales
 * the supply slope first: pass 1.0 for the unshifted curves, or a value
 * in (0, 1) to weaken supply.
 *
 * # Safety
 * `out_friend_count` and `out_cost` must be writable.
 */
enum FofStatus fof_equilibrium(double demand_intercept,
                               double demand_slope,
                               double supply_intercept,
                               double supply_slope,
                               double factor,
                               double *out_friend_count,
                               double *out_cost);

/**
 * Generates a seeded synthetic graph. When `out_roles` is non-null it
 * must hold `n_individuals + n_institutions` bytes and receives one
 * role per node: 0 active individual, 1 dormant individual, 2
 * institution.
 *
 * # Safety
 * `config` must be readable, `out` writable, and `out_roles` either
 * null or writable for `roles_len` bytes.
 */
enum FofStatus fof_generate(const struct FofGeneratorConfig *config,
                            struct FofGraph **out,
                            uint8_t *out_roles,
                            size_t roles_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FOFNET_H */
