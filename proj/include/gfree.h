/* gfree: pattern-free graph coloring
 *
 * C interface to the solver library. Handles are opaque; every function
 * that can fail returns a gfree_status, with a thread-local message
 * available from gfree_last_error(). Strings returned through char** are
 * heap-allocated and must be released with gfree_string_free(). Structured
 * results (colorings, certificates, audit reports) come back as JSON text.
 */

#ifndef GFREE_H
#define GFREE_H

#if defined(_WIN32)
#define GFREE_API __declspec(dllexport)
#else
#define GFREE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gfree_graph gfree_graph;
typedef struct gfree_pattern gfree_pattern;

typedef enum gfree_status {
  GFREE_OK = 0,
  GFREE_ERR_PARSE = 1,       /* malformed input text */
  GFREE_ERR_INVALID = 2,     /* argument outside the documented domain */
  GFREE_ERR_UNSUPPORTED = 3, /* valid but beyond implemented limits */
  GFREE_ERR_TIMEOUT = 4,     /* time limit hit before an answer */
  GFREE_ERR_INTERNAL = 5
} gfree_status;

GFREE_API const char* gfree_version(void);

/* Message for the most recent failure on this thread; never NULL. */
GFREE_API const char* gfree_last_error(void);

GFREE_API void gfree_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* Spec language: atoms K5, C6, P4, K3,4, K6-C6, petersen, g6:<graph6>,
 * an optional copy-count prefix (4K1), and the combinators `+` (join)
 * and `.` (disjoint union), applied left to right. */
GFREE_API gfree_status gfree_graph_from_spec(const char* spec,
                                             gfree_graph** out);

/* One graph6 value, no trailing data. */
GFREE_API gfree_status gfree_graph_from_graph6(const char* text,
                                               gfree_graph** out);

/* DIMACS edge-list text (p edge / e lines). */
GFREE_API gfree_status gfree_graph_from_dimacs(const char* text,
                                               gfree_graph** out);

GFREE_API void gfree_graph_free(gfree_graph* g);

GFREE_API int gfree_graph_order(const gfree_graph* g);
GFREE_API long gfree_graph_size(const gfree_graph* g);
GFREE_API int gfree_graph_has_edge(const gfree_graph* g, int u, int v);
GFREE_API gfree_status gfree_graph_to_graph6(const gfree_graph* g, char** out);
GFREE_API gfree_status gfree_graph_degeneracy(const gfree_graph* g, int* out);

GFREE_API gfree_status gfree_graph_complement(const gfree_graph* g,
                                              gfree_graph** out);
GFREE_API gfree_status gfree_graph_join(const gfree_graph* a,
                                        const gfree_graph* b,
                                        gfree_graph** out);
GFREE_API gfree_status gfree_graph_disjoint_union(const gfree_graph* a,
                                                  const gfree_graph* b,
                                                  gfree_graph** out);
GFREE_API gfree_status gfree_graph_induced(const gfree_graph* g,
                                           const int* vertices, int count,
                                           gfree_graph** out);

/* ---- patterns ----------------------------------------------------- */

/* Descriptor: any graph spec (at least 2 vertices), or `cycles` for the
 * family of all 2-regular graphs, or `self` for the host graph itself
 * (pass it as self_graph; otherwise self_graph may be NULL). */
GFREE_API gfree_status gfree_pattern_parse(const char* descriptor,
                                           const gfree_graph* self_graph,
                                           gfree_pattern** out);

/* Switch a single-graph pattern between subgraph containment (default,
 * induced = 0) and induced containment. */
GFREE_API gfree_status gfree_pattern_set_induced(gfree_pattern* p,
                                                 int induced);

GFREE_API int gfree_pattern_min_degree(const gfree_pattern* p);
GFREE_API void gfree_pattern_free(gfree_pattern* p);

/* ---- structure queries -------------------------------------------- */

GFREE_API gfree_status gfree_contains_copy(const gfree_graph* h,
                                           const gfree_pattern* p,
                                           int* found);
GFREE_API gfree_status gfree_clique_number(const gfree_graph* g, int* out);

/* Girth; 0 when the graph has no cycle. */
GFREE_API gfree_status gfree_girth(const gfree_graph* g, int* out);

/* ---- solving -------------------------------------------------------
 * time_limit_ms <= 0 means no limit. JSON out-parameters may be NULL
 * when the caller only wants the scalar answer. */

/* coloring_json receives NULL when no pattern-free k-coloring exists. */
GFREE_API gfree_status gfree_decide_k(const gfree_graph* h,
                                      const gfree_pattern* p, int k,
                                      long time_limit_ms, int* feasible,
                                      char** coloring_json);

/* Exact pattern-free chromatic number. with_bounds != 0 also evaluates
 * every constructive upper bound and reports them alongside the value. */
GFREE_API gfree_status gfree_chi(const gfree_graph* h, const gfree_pattern* p,
                                 long time_limit_ms, int with_bounds,
                                 int* value, char** report_json);

GFREE_API gfree_status gfree_greedy_coloring(const gfree_graph* h,
                                             const gfree_pattern* p,
                                             int* classes_used,
                                             char** coloring_json);

/* Bounded-degree decomposition into `k` classes with per-class degree
 * caps[0..k-1]; needs caps summing to at least maxdeg - k + 1. */
GFREE_API gfree_status gfree_lovasz_decompose(const gfree_graph* h,
                                              const int* caps, int k,
                                              char** result_json);

/* Critical core with per-element deletion evidence. */
GFREE_API gfree_status gfree_critical(const gfree_graph* h,
                                      const gfree_pattern* p,
                                      long time_limit_ms,
                                      char** certificate_json);

GFREE_API gfree_status gfree_subgraph_with_chi(const gfree_graph* h,
                                               const gfree_pattern* p,
                                               int target, long time_limit_ms,
                                               gfree_graph** out);

/* ---- complement sums ---------------------------------------------- */

GFREE_API gfree_status gfree_ng(const gfree_graph* h, const gfree_pattern* p,
                                long time_limit_ms, char** record_json);

GFREE_API gfree_status gfree_refined_conditions(const gfree_graph* h, int d,
                                                long time_limit_ms,
                                                char** report_json);

/* Run the published extremal constructions; all_ok reports whether every
 * one hit its bound exactly. */
GFREE_API gfree_status gfree_witness_suite(long time_limit_ms, int* all_ok,
                                           char** results_json);

/* ---- corpus tools -------------------------------------------------- */

/* All isomorphism classes on exactly n vertices, one graph6 per line. */
GFREE_API gfree_status gfree_enumerate_graph6(int n, char** lines);

/* Audit every (graph, pattern descriptor) pair in a graph6 corpus.
 * violation_count receives the number of proved-inequality violations. */
GFREE_API gfree_status gfree_verify_graph6(const char* text,
                                           const char* const* patterns,
                                           int pattern_count, int jobs,
                                           long time_limit_ms,
                                           long* violation_count,
                                           char** report_json);

/* Same audit over every isomorphism class with at most max_n vertices. */
GFREE_API gfree_status gfree_verify_enumerated(int max_n,
                                               const char* const* patterns,
                                               int pattern_count, int jobs,
                                               long time_limit_ms,
                                               long* violation_count,
                                               char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* GFREE_H */
