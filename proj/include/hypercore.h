/*
 * hypercore - (k,g)-core computation and decomposition for hypergraphs.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and released through the functions below; every fallible call returns an
 * hc_status and writes its result through out-parameters. Handles are
 * immutable once created and may be shared between threads; hc_last_error()
 * is thread-local.
 */

#ifndef HYPERCORE_H
#define HYPERCORE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_IO = 1,      /* file cannot be opened/read/written */
    HC_ERR_PARSE = 2,   /* malformed edge list or index file */
    HC_ERR_DOMAIN = 3,  /* argument outside an operation's domain */
    HC_ERR_CONFIG = 4,  /* invalid generator configuration */
    HC_ERR_VERSION = 5, /* index file from an incompatible version */
    HC_ERR_INTERNAL = 6
} hc_status;

typedef enum hc_algorithm {
    HC_ALG_EPA = 0,   /* count-only peeling, O(|V|) auxiliary state */
    HC_ALG_NAIVE = 1, /* explicit g-neighbour maps, kept for memory contrast */
    HC_ALG_ORACLE = 2 /* brute-force fixpoint over the definition */
} hc_algorithm;

typedef struct hc_hypergraph hc_hypergraph;
typedef struct hc_nodeset hc_nodeset;
typedef struct hc_decomposition hc_decomposition;
typedef struct hc_index hc_index;

/* Static description of a status code. */
const char* hc_status_name(hc_status status);
/* Detail message of the most recent failure on this thread ("" if none). */
const char* hc_last_error(void);

/* ---- hypergraph ------------------------------------------------------- */

/* Edge-list text: one hyperedge per line, labels separated by spaces, tabs
 * or commas; '#' lines are comments. Duplicate labels within a line
 * collapse; duplicate lines stay distinct edges. */
hc_status hc_hypergraph_load_path(const char* path, hc_hypergraph** out);
hc_status hc_hypergraph_parse(const char* text, size_t length, hc_hypergraph** out);
hc_status hc_hypergraph_save_path(const hc_hypergraph* graph, const char* path);
void hc_hypergraph_free(hc_hypergraph* graph);

uint32_t hc_hypergraph_node_count(const hc_hypergraph* graph);
size_t hc_hypergraph_edge_count(const hc_hypergraph* graph);
hc_status hc_hypergraph_degree(const hc_hypergraph* graph, uint32_t node, size_t* out);
/* Borrowed pointer, valid while the graph lives; NULL on bad id. */
const char* hc_hypergraph_label(const hc_hypergraph* graph, uint32_t node);
hc_status hc_hypergraph_find(const hc_hypergraph* graph, const char* label, uint32_t* out_node);

/* Number of hyperedges containing both u and v (u != v). */
hc_status hc_support(const hc_hypergraph* graph, uint32_t u, uint32_t v, uint64_t* out);

/* Subhypergraph induced by `nodes`: each edge keeps its members inside the
 * set and survives with at least two of them. nodes may be NULL only when
 * count is 0, which induces on the empty set. */
hc_status hc_induced(const hc_hypergraph* graph, const uint32_t* nodes, size_t count,
                     hc_hypergraph** out);

typedef struct hc_stats {
    uint64_t node_count;
    uint64_t edge_count;
    double avg_degree;
    double avg_support;
    double vertex_density;
} hc_stats;

/* Stats of the subhypergraph induced by `nodes` (NULL allowed only with
 * count 0: the empty set). */
hc_status hc_subhypergraph_stats(const hc_hypergraph* graph, const uint32_t* nodes, size_t count,
                                 hc_stats* out);
/* Stats of the whole graph. */
hc_status hc_stats_all(const hc_hypergraph* graph, hc_stats* out);

/* ---- (k,g)-core ------------------------------------------------------- */

/* The (k,g)-core: maximal node set in which every node co-occurs at least g
 * times with at least k other members. k,g >= 1; an empty result is legal. */
hc_status hc_core(const hc_hypergraph* graph, uint32_t k, uint32_t g, hc_algorithm algorithm,
                  hc_nodeset** out);

typedef struct hc_mem_report {
    uint64_t peak_entries;      /* all accounted auxiliary slots */
    uint64_t peak_pair_entries; /* persistent per-pair slots only */
    uint64_t peak_bytes;        /* entries x nominal slot width */
} hc_mem_report;

/* As hc_core, additionally reporting the high-water mark of the algorithm's
 * auxiliary structures (epa and naive only; out may be NULL). */
hc_status hc_core_profiled(const hc_hypergraph* graph, uint32_t k, uint32_t g,
                           hc_algorithm algorithm, hc_nodeset** out, hc_mem_report* report);

size_t hc_nodeset_size(const hc_nodeset* set);
/* Ids are sorted ascending; UINT32_MAX on out-of-range access. */
uint32_t hc_nodeset_at(const hc_nodeset* set, size_t i);
void hc_nodeset_free(hc_nodeset* set);

/* ---- decomposition and coreness index --------------------------------- */

/* Computes every nonempty (k,g)-core plus the per-node skyline of maximal
 * (k,g) pairs. */
hc_status hc_decompose(const hc_hypergraph* graph, hc_decomposition** out);
void hc_decomposition_free(hc_decomposition* d);

size_t hc_decomposition_core_count(const hc_decomposition* d);
/* i-th nonempty core in ascending (g,k) order. members may be NULL when only
 * the parameters are wanted. */
hc_status hc_decomposition_core_at(const hc_decomposition* d, size_t i, uint32_t* k, uint32_t* g,
                                   hc_nodeset** members);
/* Borrowed; valid while the decomposition lives. */
const hc_index* hc_decomposition_index(const hc_decomposition* d);

/* Index file: JSON {"version":1,"labels":[...],"skylines":[[[k,g],...],...]}
 * with skylines parallel to labels and pairs sorted by ascending k. */
hc_status hc_index_save_path(const hc_index* index, const char* path);
hc_status hc_index_load_path(const char* path, hc_index** out);
void hc_index_free(hc_index* index);

uint32_t hc_index_node_count(const hc_index* index);
const char* hc_index_label(const hc_index* index, uint32_t node);
size_t hc_index_skyline_size(const hc_index* index, uint32_t node);
hc_status hc_index_skyline_at(const hc_index* index, uint32_t node, size_t i, uint32_t* k,
                              uint32_t* g);

/* Members of the (k,g)-core answered from the skyline alone; equals
 * hc_core() on the hypergraph the index was built from. */
hc_status hc_index_query(const hc_index* index, uint32_t k, uint32_t g, hc_nodeset** out);

/* Largest g' with the node in the (k,g')-core, 0 when there is none; the
 * g-coreness variant is symmetric. */
hc_status hc_index_k_coreness(const hc_index* index, uint32_t node, uint32_t k, uint32_t* out_g);
hc_status hc_index_g_coreness(const hc_index* index, uint32_t node, uint32_t g, uint32_t* out_k);

/* ---- synthetic generator ---------------------------------------------- */

typedef struct hc_gen_config {
    uint64_t node_count;
    uint64_t edge_count;
    uint32_t cardinality_min;
    uint32_t cardinality_max;
    double degree_exponent; /* > 1; larger means flatter degree skew */
    uint32_t community_count;
    double noise; /* in [0,1]; 1 = fully uniform member choice */
    uint64_t seed;
} hc_gen_config;

void hc_gen_config_defaults(hc_gen_config* cfg);
/* Deterministic per config; byte-identical edge lists across platforms. */
hc_status hc_generate(const hc_gen_config* cfg, hc_hypergraph** out);

#ifdef __cplusplus
}
#endif

#endif /* HYPERCORE_H */
