/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sgmc.h"

#include <cstring>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/kernelizer.hpp"
#include "core/oracle.hpp"
#include "core/signed_graph.hpp"
#include "core/solver.hpp"

struct sgmc_graph {
  sgmc::SignedGraph g;
};

struct sgmc_kernel_result {
  sgmc::kernel::KernelOutcome outcome;
  sgmc_graph kernel_wrapper;
};

namespace {

thread_local std::string g_last_error;

sgmc_status to_status(const sgmc::Error& e) {
  switch (e.code()) {
    case sgmc::Errc::invalid_argument: return SGMC_ERR_INVALID;
    case sgmc::Errc::limit_exceeded: return SGMC_ERR_LIMIT;
    case sgmc::Errc::precondition_failed: return SGMC_ERR_PRECONDITION;
    case sgmc::Errc::internal: return SGMC_ERR_INTERNAL;
  }
  return SGMC_ERR_INTERNAL;
}

sgmc_status set_error(sgmc_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
sgmc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const sgmc::Error& e) {
    return set_error(to_status(e), e.what());
  } catch (const std::exception& e) {
    return set_error(SGMC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SGMC_ERR_INTERNAL, "unknown error");
  }
}

sgmc_status fill_ints(const std::vector<int>& src, int* buf, size_t cap, size_t* len) {
  if (len) *len = src.size();
  if (src.size() > cap) return set_error(SGMC_ERR_BUFFER, "output buffer too small");
  if (buf && !src.empty()) std::memcpy(buf, src.data(), src.size() * sizeof(int));
  return SGMC_OK;
}

}  // namespace

extern "C" {

const char* sgmc_status_name(sgmc_status status) {
  switch (status) {
    case SGMC_OK: return "ok";
    case SGMC_ERR_INVALID: return "invalid-argument";
    case SGMC_ERR_LIMIT: return "limit-exceeded";
    case SGMC_ERR_PRECONDITION: return "precondition-failed";
    case SGMC_ERR_BUFFER: return "buffer-too-small";
    case SGMC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* sgmc_last_error(void) { return g_last_error.c_str(); }

sgmc_status sgmc_graph_create(int n, const int* us, const int* vs, const char* signs, size_t m,
                              sgmc_graph** out) {
  return guarded([&]() -> sgmc_status {
    if (!out || (m > 0 && (!us || !vs || !signs)))
      return set_error(SGMC_ERR_INVALID, "null argument");
    std::vector<sgmc::RawEdge> edges(m);
    for (size_t i = 0; i < m; ++i) {
      if (signs[i] != '+' && signs[i] != '-')
        return set_error(SGMC_ERR_INVALID, "edge sign must be '+' or '-'");
      edges[i] = {us[i], vs[i],
                  signs[i] == '+' ? sgmc::Sign::positive : sgmc::Sign::negative};
    }
    *out = new sgmc_graph{sgmc::SignedGraph::build(n, edges)};
    return SGMC_OK;
  });
}

void sgmc_graph_free(sgmc_graph* g) { delete g; }

int sgmc_graph_vertex_count(const sgmc_graph* g) { return g ? g->g.vertex_count() : 0; }

long long sgmc_graph_edge_count(const sgmc_graph* g) { return g ? g->g.edge_count() : 0; }

sgmc_status sgmc_graph_vertices(const sgmc_graph* g, int* buf, size_t cap, size_t* len) {
  return guarded([&]() -> sgmc_status {
    if (!g) return set_error(SGMC_ERR_INVALID, "null graph");
    return fill_ints(g->g.vertices(), buf, cap, len);
  });
}

sgmc_status sgmc_graph_edges(const sgmc_graph* g, int* ubuf, int* vbuf, char* signbuf, size_t cap,
                             size_t* len) {
  return guarded([&]() -> sgmc_status {
    if (!g) return set_error(SGMC_ERR_INVALID, "null graph");
    auto edges = g->g.edges();
    if (len) *len = edges.size();
    if (edges.size() > cap) return set_error(SGMC_ERR_BUFFER, "output buffer too small");
    for (size_t i = 0; i < edges.size(); ++i) {
      if (ubuf) ubuf[i] = edges[i].u;
      if (vbuf) vbuf[i] = edges[i].v;
      if (signbuf) signbuf[i] = sgmc::sign_char(edges[i].sign);
    }
    return SGMC_OK;
  });
}

sgmc_status sgmc_graph_is_connected(const sgmc_graph* g, int* connected) {
  return guarded([&]() -> sgmc_status {
    if (!g || !connected) return set_error(SGMC_ERR_INVALID, "null argument");
    *connected = sgmc::is_connected(g->g) ? 1 : 0;
    return SGMC_OK;
  });
}

sgmc_status sgmc_bound(const sgmc_graph* g, long long* quarters, int* components) {
  return guarded([&]() -> sgmc_status {
    if (!g) return set_error(SGMC_ERR_INVALID, "null graph");
    auto qb = sgmc::quarter_bound(g->g);
    if (quarters) *quarters = qb.quarters;
    if (components) *components = qb.components;
    return SGMC_OK;
  });
}

sgmc_status sgmc_balance(const sgmc_graph* g, int* balanced, int* buf, size_t cap, size_t* len) {
  return guarded([&]() -> sgmc_status {
    if (!g || !balanced) return set_error(SGMC_ERR_INVALID, "null argument");
    auto witness = sgmc::is_balanced(g->g);
    *balanced = witness.balanced ? 1 : 0;
    return fill_ints(witness.balanced ? witness.switch_set : witness.odd_cycle, buf, cap, len);
  });
}

sgmc_status sgmc_solve(const sgmc_graph* g, int k, int exact_beta, sgmc_solve_result* out) {
  return guarded([&]() -> sgmc_status {
    if (!g || !out) return set_error(SGMC_ERR_INVALID, "null argument");
    sgmc::solver::SolveOptions opts;
    opts.exact_beta = exact_beta != 0;
    auto r = sgmc::solver::solve(g->g, k, opts);
    out->answer = r.yes ? 1 : 0;
    out->has_beta = r.beta.has_value() ? 1 : 0;
    out->beta = r.beta.value_or(0);
    out->route = r.route == sgmc::solver::Route::early_yes_by_rules
                     ? SGMC_ROUTE_EARLY_YES
                     : SGMC_ROUTE_FULL_ENUMERATION;
    out->marked_count = static_cast<long long>(r.marked_size);
    out->guesses = r.guesses;
    return SGMC_OK;
  });
}

sgmc_status sgmc_oracle_beta(const sgmc_graph* g, int vertex_limit, long long* beta) {
  return guarded([&]() -> sgmc_status {
    if (!g || !beta) return set_error(SGMC_ERR_INVALID, "null argument");
    *beta = sgmc::oracle::beta(g->g, vertex_limit);
    return SGMC_OK;
  });
}

sgmc_status sgmc_oracle_decide(const sgmc_graph* g, int k, int vertex_limit, int* yes) {
  return guarded([&]() -> sgmc_status {
    if (!g || !yes) return set_error(SGMC_ERR_INVALID, "null argument");
    *yes = sgmc::oracle::decide(g->g, k, vertex_limit) ? 1 : 0;
    return SGMC_OK;
  });
}

sgmc_status sgmc_kernelize(const sgmc_graph* g, int k, sgmc_kernel_result** out) {
  return guarded([&]() -> sgmc_status {
    if (!g || !out) return set_error(SGMC_ERR_INVALID, "null argument");
    auto r = new sgmc_kernel_result;
    r->outcome = sgmc::kernel::kernelize(g->g, k);
    r->kernel_wrapper.g = r->outcome.kernel;
    *out = r;
    return SGMC_OK;
  });
}

void sgmc_kernel_result_free(sgmc_kernel_result* r) { delete r; }

int sgmc_kernel_resolved_yes(const sgmc_kernel_result* r) {
  return r && r->outcome.resolved_yes ? 1 : 0;
}

int sgmc_kernel_reason(const sgmc_kernel_result* r) {
  if (!r || !r->outcome.resolved_yes) return 0;
  switch (r->outcome.reason) {
    case sgmc::kernel::YesReason::k_nonpositive: return SGMC_KERNEL_REASON_K_NONPOSITIVE;
    case sgmc::kernel::YesReason::bound_leafs: return SGMC_KERNEL_REASON_BOUND_LEAFS;
    case sgmc::kernel::YesReason::path_length: return SGMC_KERNEL_REASON_PATH_LENGTH;
    case sgmc::kernel::YesReason::block_size: return SGMC_KERNEL_REASON_BLOCK_SIZE;
  }
  return 0;
}

const char* sgmc_kernel_reason_name(int reason) {
  switch (reason) {
    case SGMC_KERNEL_REASON_K_NONPOSITIVE:
      return sgmc::kernel::reason_name(sgmc::kernel::YesReason::k_nonpositive);
    case SGMC_KERNEL_REASON_BOUND_LEAFS:
      return sgmc::kernel::reason_name(sgmc::kernel::YesReason::bound_leafs);
    case SGMC_KERNEL_REASON_PATH_LENGTH:
      return sgmc::kernel::reason_name(sgmc::kernel::YesReason::path_length);
    case SGMC_KERNEL_REASON_BLOCK_SIZE:
      return sgmc::kernel::reason_name(sgmc::kernel::YesReason::block_size);
  }
  return "unknown";
}

const sgmc_graph* sgmc_kernel_graph(const sgmc_kernel_result* r) {
  if (!r || r->outcome.resolved_yes) return nullptr;
  return &r->kernel_wrapper;
}

int sgmc_kernel_k(const sgmc_kernel_result* r) {
  return r && !r->outcome.resolved_yes ? r->outcome.kernel_k : 0;
}

sgmc_status sgmc_kernel_marked(const sgmc_kernel_result* r, int* buf, size_t cap, size_t* len) {
  return guarded([&]() -> sgmc_status {
    if (!r) return set_error(SGMC_ERR_INVALID, "null argument");
    return fill_ints(r->outcome.marked_set, buf, cap, len);
  });
}

long long sgmc_kernel_bound(int k) { return sgmc::kernel::size_bound(k); }

}  // extern "C"
