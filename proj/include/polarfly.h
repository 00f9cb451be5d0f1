/* C interface to the polarfly library.
 *
 * All functions return a pf_status; on failure pf_last_error() holds a
 * message describing the most recent error on the calling thread.
 * Strings returned through char** are heap-allocated and must be
 * released with pf_string_free().
 */
#ifndef POLARFLY_H
#define POLARFLY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pf_topology pf_topology;

enum {
  PF_OK = 0,
  PF_ERR_INVALID_ARGUMENT = 1,
  PF_ERR_VERIFICATION_FAILED = 2,
  PF_ERR_IO = 3,
  PF_ERR_INTERNAL = 4
};
typedef int pf_status;

const char* pf_last_error(void);
void pf_string_free(char* s);

/* Builds the polarity graph for prime power q. */
pf_status pf_topology_create(int q, pf_topology** out);
/* Parses the edge-list format produced by pf_topology_render. */
pf_status pf_topology_from_edge_list(const char* text, pf_topology** out);
void pf_topology_destroy(pf_topology* t);

int pf_topology_q(const pf_topology* t);
int pf_topology_vertex_count(const pf_topology* t);
long long pf_topology_edge_count(const pf_topology* t);

/* format: "edgelist" | "dot" | "json" */
pf_status pf_topology_render(const pf_topology* t, const char* format,
                             char** out);

/* Runs the full structural check suite (counts, neighborhood structure,
 * layout and triangle properties for odd q). starter < 0 picks the
 * default starter quadric. *passed is 1 iff every check passed; the
 * report is JSON with one entry per check. */
pf_status pf_verify(const pf_topology* t, int starter, char** report,
                    int* passed);

/* Cluster layout plus triangle inventory as JSON; odd q only. */
pf_status pf_layout(const pf_topology* t, int starter, char** json);

/* method: "quadric" | "nonquadric"; format: "edgelist" | "json" */
pf_status pf_expand(const pf_topology* t, const char* method,
                    int replications, const char* format, char** out);

/* policy: "min" | "valiant" | "compact" */
pf_status pf_route(const pf_topology* t, int src, int dst,
                   const char* policy, uint64_t seed, char** json);

/* config_json schema (all keys optional except traffic and rates):
 *   p_endpoints, packet_size, buffer_per_port, vcs, router_delay,
 *   warmup_cycles, measure_cycles, seed : integers
 *   traffic : "uniform" | "permutation" | "tornado" | "perm1hop" | "perm2hop"
 *   routing : "min" | "valiant" | "compact" | "ugal" | "ugal_pf"
 *   rates   : ascending array of offered loads in [0,1]
 * Output: CSV curve plus a trailing saturation summary line. */
pf_status pf_simulate(const pf_topology* t, const char* config_json,
                      char** csv);

/* kind: "moore" (params: k_min, k_max) | "bisection" (restarts, seed)
 *       | "resilience" (runs, seed, step). JSON in, JSON out. */
pf_status pf_analyze(const pf_topology* t, const char* kind,
                     const char* params_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
