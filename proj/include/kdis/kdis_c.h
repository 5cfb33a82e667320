/* C interface to the k-DIS workbench.
 *
 * All functions return a kdisw_status; results come back through out
 * parameters.  Graphs are opaque handles released with kdisw_graph_free.
 * Strings allocated by the library are released with kdisw_string_free,
 * vertex-set arrays with kdisw_sets_free.  On error, a thread-local message
 * is available from kdisw_last_error(); parse errors also carry the byte
 * offset of the offending input byte.
 */
#ifndef KDIS_C_H
#define KDIS_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kdisw_graph kdisw_graph;

typedef enum kdisw_status {
    KDISW_OK = 0,
    KDISW_ERR_PARSE = 1,
    KDISW_ERR_SIZE = 2,
    KDISW_ERR_DOMAIN = 3,
    KDISW_ERR_BUDGET = 4,
    KDISW_ERR_DEPENDENCY = 5,
    KDISW_ERR_CONTRACT = 6,
    KDISW_ERR_INVALID_ARGUMENT = 7,
    KDISW_ERR_NOMEM = 8,
    KDISW_ERR_UNKNOWN = 99
} kdisw_status;

const char* kdisw_status_name(kdisw_status status);
const char* kdisw_version(void);

/* Thread-local description of the most recent error in this thread. */
const char* kdisw_last_error(void);
/* Byte offset of the most recent parse error in this thread, -1 otherwise. */
long kdisw_last_error_offset(void);

/* ---- graphs ---------------------------------------------------------- */

kdisw_status kdisw_graph_from_g6(const char* line, kdisw_graph** out);
kdisw_status kdisw_graph_to_g6(const kdisw_graph* g, char** out);
void kdisw_graph_free(kdisw_graph* g);

kdisw_status kdisw_graph_complete_multipartite(const int* part_sizes, int parts, kdisw_graph** out);
kdisw_status kdisw_graph_disjoint_union(const kdisw_graph* a, const kdisw_graph* b, kdisw_graph** out);
kdisw_status kdisw_graph_lexicographic_product(const kdisw_graph* a, const kdisw_graph* b,
                                               kdisw_graph** out);
kdisw_status kdisw_graph_tensor_product(const kdisw_graph* a, const kdisw_graph* b, kdisw_graph** out);

kdisw_status kdisw_graph_order(const kdisw_graph* g, int* out);
kdisw_status kdisw_graph_edge_count(const kdisw_graph* g, long long* out);
kdisw_status kdisw_graph_min_degree(const kdisw_graph* g, int* out);
kdisw_status kdisw_graph_degree(const kdisw_graph* g, int v, int* out);
kdisw_status kdisw_graph_neighborhood(const kdisw_graph* g, int v, uint64_t* out);
kdisw_status kdisw_graph_is_connected(const kdisw_graph* g, int* out);
kdisw_status kdisw_graph_is_tree(const kdisw_graph* g, int* out);
kdisw_status kdisw_graph_is_triangle_free(const kdisw_graph* g, int* out);
kdisw_status kdisw_graph_is_isomorphic(const kdisw_graph* a, const kdisw_graph* b, int* out);

/* ---- k-DIS queries --------------------------------------------------- */

kdisw_status kdisw_is_independent(const kdisw_graph* g, uint64_t set, int* out);
kdisw_status kdisw_is_kdis(const kdisw_graph* g, uint64_t set, int k, int* out);
kdisw_status kdisw_count_kdis(const kdisw_graph* g, int k, long long* out);

/* Sets are bitmasks over vertices 0..n-1, ascending; free with
 * kdisw_sets_free. */
kdisw_status kdisw_enumerate_kdis(const kdisw_graph* g, int k, uint64_t** sets, size_t* count);
void kdisw_sets_free(uint64_t* sets);

/* Blow-up of an independent set along the product with an edgeless graph on
 * l vertices. */
kdisw_status kdisw_lift_kdis(const kdisw_graph* g, uint64_t set, int l, uint64_t* out);

/* ---- search, sweeps, verification (JSON results) --------------------- */

/* family: "all", "connected", "triangle-free" or "tree"; jobs <= 0 = auto. */
kdisw_status kdisw_search_json(int n, int k, const char* family, int jobs, char** json_out);
kdisw_status kdisw_m_value_json(int k, int t, int n_budget, int jobs, char** json_out);

typedef void (*kdisw_graph6_callback)(const char* graph6_line, void* user);
kdisw_status kdisw_generate(int n, const char* family, kdisw_graph6_callback cb, void* user);

/* fn: "f0", "f1", "f2" or "f3". */
kdisw_status kdisw_sweep_json(const char* fn, long long k_lo, long long k_hi, double epsilon,
                              double beta, int jobs, char** json_out);
kdisw_status kdisw_sweep_csv(const char* fn, long long k_lo, long long k_hi, double epsilon,
                             double beta, char** csv_out);

/* Negative option values select the defaults. */
typedef struct kdisw_verify_options {
    int jobs;
    int n_max;    /* order cap for the exhaustive family searches */
    int n_budget; /* order budget for m(k,t) searches */
} kdisw_verify_options;

/* suite: one of the named verification suites, or "all".  *ok_out is set to
 * 1 when every check passed. */
kdisw_status kdisw_verify_json(const char* suite, const kdisw_verify_options* options,
                               char** json_out, int* ok_out);
kdisw_status kdisw_verify_suites(char** json_out); /* JSON array of suite names */

void kdisw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
