/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef SGMC_H
#define SGMC_H

/*
 * C interface of the sgmc solver library.
 *
 * Graphs are simple undirected signed graphs handed around as opaque
 * handles. Every fallible call returns a status code; sgmc_last_error()
 * holds a thread-local human-readable detail for the last failing call on
 * the calling thread. Output arrays use a caller-provided buffer plus
 * capacity; when the capacity is too small the call reports the required
 * length and returns SGMC_ERR_BUFFER.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SGMC_OK 0
#define SGMC_ERR_INVALID 1      /* bad argument or malformed input */
#define SGMC_ERR_LIMIT 2        /* brute-force size limit exceeded */
#define SGMC_ERR_PRECONDITION 3 /* operation precondition violated */
#define SGMC_ERR_BUFFER 4       /* output buffer too small */
#define SGMC_ERR_INTERNAL 5     /* internal invariant breach */

typedef int sgmc_status;

typedef struct sgmc_graph sgmc_graph;
typedef struct sgmc_kernel_result sgmc_kernel_result;

const char* sgmc_status_name(sgmc_status status);
const char* sgmc_last_error(void);

/*
 * Vertices are 1..n; signs are the characters '+' and '-'. Parallel edges of
 * opposite sign cancel pairwise; same-sign parallels and self-loops are
 * rejected.
 */
sgmc_status sgmc_graph_create(int n, const int* us, const int* vs, const char* signs, size_t m,
                              sgmc_graph** out);
void sgmc_graph_free(sgmc_graph* g);

int sgmc_graph_vertex_count(const sgmc_graph* g);
long long sgmc_graph_edge_count(const sgmc_graph* g);
/* Vertex identifiers ascending; may be non-contiguous for derived graphs. */
sgmc_status sgmc_graph_vertices(const sgmc_graph* g, int* buf, size_t cap, size_t* len);
/* Edges normalized to u < v, sorted; the three arrays share indexing. */
sgmc_status sgmc_graph_edges(const sgmc_graph* g, int* ubuf, int* vbuf, char* signbuf, size_t cap,
                             size_t* len);
sgmc_status sgmc_graph_is_connected(const sgmc_graph* g, int* connected);

/*
 * Exact lower-bound arithmetic in quarter edges: quarters = 2m + n - t for a
 * graph with t components (four times the Poljak-Turzik bound).
 */
sgmc_status sgmc_bound(const sgmc_graph* g, long long* quarters, int* components);

/*
 * Balance test. Balanced: *balanced = 1 and buf receives the switch set
 * (switching it removes every negative edge). Unbalanced: *balanced = 0 and
 * buf receives a cycle with an odd number of negative edges, in cycle order.
 */
sgmc_status sgmc_balance(const sgmc_graph* g, int* balanced, int* buf, size_t cap, size_t* len);

#define SGMC_ROUTE_EARLY_YES 0
#define SGMC_ROUTE_FULL_ENUMERATION 1

typedef struct sgmc_solve_result {
  int answer; /* 1 yes, 0 no */
  int has_beta;
  long long beta;
  int route;
  long long marked_count; /* |S| */
  unsigned long long guesses;
} sgmc_solve_result;

/*
 * Decide whether the connected graph has a balanced subgraph with at least
 * (quarters + k) / 4 edges. With exact_beta nonzero the maximum balanced
 * subgraph size is always computed; otherwise an early yes skips it.
 */
sgmc_status sgmc_solve(const sgmc_graph* g, int k, int exact_beta, sgmc_solve_result* out);

/* Brute-force reference: exact beta by assignment enumeration. */
sgmc_status sgmc_oracle_beta(const sgmc_graph* g, int vertex_limit, long long* beta);
sgmc_status sgmc_oracle_decide(const sgmc_graph* g, int k, int vertex_limit, int* yes);

#define SGMC_KERNEL_REASON_K_NONPOSITIVE 1
#define SGMC_KERNEL_REASON_BOUND_LEAFS 2
#define SGMC_KERNEL_REASON_PATH_LENGTH 3
#define SGMC_KERNEL_REASON_BLOCK_SIZE 4

/*
 * Kernelization: either the instance is resolved as a yes-instance (with a
 * reason code), or an equivalent instance with at most sgmc_kernel_bound(k)
 * vertices is produced.
 */
sgmc_status sgmc_kernelize(const sgmc_graph* g, int k, sgmc_kernel_result** out);
void sgmc_kernel_result_free(sgmc_kernel_result* r);

int sgmc_kernel_resolved_yes(const sgmc_kernel_result* r);
int sgmc_kernel_reason(const sgmc_kernel_result* r);
const char* sgmc_kernel_reason_name(int reason);
/* Borrowed reference, valid while the result lives; NULL when resolved. */
const sgmc_graph* sgmc_kernel_graph(const sgmc_kernel_result* r);
int sgmc_kernel_k(const sgmc_kernel_result* r);
/* The distinguished set S accompanying the kernel, ascending. */
sgmc_status sgmc_kernel_marked(const sgmc_kernel_result* r, int* buf, size_t cap, size_t* len);

/* 3k + 24k^2(8k-3) + 24k(8k-3) + 3k(8k-3)(8k+1); 0 for k <= 0. */
long long sgmc_kernel_bound(int k);

#ifdef __cplusplus
}
#endif

#endif /* SGMC_H */
