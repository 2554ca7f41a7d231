/* C interface to the daisycube shared library.
 *
 * Graphs are opaque handles; every function returns a dc_status and writes
 * results through out-parameters. On failure dc_last_error() returns a
 * thread-local detail message. Strings returned through char** are owned by
 * the caller and must be released with dc_string_free().
 */
#ifndef DAISYCUBE_H
#define DAISYCUBE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dc_graph dc_graph;

typedef enum dc_status {
    DC_OK = 0,
    DC_ERR_INVALID_ARG = 1,
    DC_ERR_SIZE_LIMIT = 2,
    DC_ERR_PARSE = 3,
    DC_ERR_DISCONNECTED = 4,
    DC_ERR_NOT_DAISY = 5,     /* labeling is not downward-closed */
    DC_ERR_NOT_ISOMETRIC = 6, /* labeling is not an isometric embedding */
    DC_ERR_OVERFLOW = 7,
} dc_status;

typedef enum dc_method {
    DC_METHOD_SEMICUBE = 0,
    DC_METHOD_ORACLE = 1,
    DC_METHOD_COROLLARY = 2,
} dc_method;

typedef struct dc_index_report {
    uint64_t vertex_count;
    uint64_t edge_count;
    int64_t wiener;
    int64_t mostar;
    int64_t residual; /* 2W - Mo - |V||E| */
    int relation_holds;
} dc_index_report;

/* Static name for a status code ("ok", "parse error", ...). */
const char* dc_status_name(dc_status status);

/* Detail message of the most recent failing call on this thread, or "". */
const char* dc_last_error(void);

void dc_string_free(char* s);
void dc_graph_free(dc_graph* g);

/* Constructors. A vertex_cap of 0 selects the default cap (2^20). */
dc_status dc_graph_hypercube(int n, uint64_t vertex_cap, dc_graph** out);
dc_status dc_graph_fibonacci(int n, uint64_t vertex_cap, dc_graph** out);
dc_status dc_graph_lucas(int n, uint64_t vertex_cap, dc_graph** out);
dc_status dc_graph_avoiding_pattern(int n, const char* pattern, uint64_t vertex_cap,
                                    dc_graph** out);
dc_status dc_graph_vertex_deleted(int n, uint64_t vertex_cap, dc_graph** out);

/* Daisy cube generated by bitstring generators u_1...u_n (left-to-right). */
dc_status dc_graph_daisy(int n, const char* const* generators, size_t count,
                         uint64_t vertex_cap, dc_graph** out);

/* Graph JSON: {"n": <int>, "vertices": ["<bitstring>", ...]}.
 * Generator JSON: {"n": <int>, "generators": ["<bitstring>", ...]}. */
dc_status dc_graph_from_json(const char* text, dc_graph** out);
dc_status dc_graph_from_generators_json(const char* text, uint64_t vertex_cap,
                                        dc_graph** out);
dc_status dc_graph_to_json(const dc_graph* g, char** out);

int dc_graph_dimension(const dc_graph* g);
uint64_t dc_graph_vertex_count(const dc_graph* g);
uint64_t dc_graph_edge_count(const dc_graph* g);

dc_status dc_graph_is_connected(const dc_graph* g, int* out);
dc_status dc_graph_is_downward_closed(const dc_graph* g, int* out);
/* Fails with DC_ERR_DISCONNECTED when distances are undefined. */
dc_status dc_graph_is_isometric(const dc_graph* g, int* out);

/* Per-direction counts; each array must hold dc_graph_dimension(g) entries. */
dc_status dc_graph_direction_profile(const dc_graph* g, uint64_t* e, uint64_t* w0,
                                     uint64_t* w1);

/* DC_METHOD_SEMICUBE requires an isometric labeling and fails with
 * DC_ERR_NOT_ISOMETRIC or DC_ERR_NOT_DAISY otherwise; DC_METHOD_COROLLARY
 * additionally requires a downward-closed labeling. */
dc_status dc_graph_indices(const dc_graph* g, dc_method method, dc_index_report* out);

/* Full property check: isometry, downward-closedness, all three index
 * methods, the per-direction propositions, and the index identities.
 * Writes a JSON report and sets *all_ok. Returns DC_OK even when checks
 * fail; only input errors produce a non-OK status. */
dc_status dc_graph_verify(const dc_graph* g, char** report_json, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* DAISYCUBE_H */
