/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signed_graph.hpp"

namespace sgmc::kernel {

enum class YesReason { k_nonpositive, bound_leafs, path_length, block_size };
const char* reason_name(YesReason reason);

// One application of a two-way rule: the produced instance is equivalent to
// the consumed one. Rules act on g - s only; s itself is never touched.
struct TwoWayApplication {
  int rule_id = 0;           // 8..11
  std::vector<int> deleted;  // sorted
  int added = 0;             // replacement vertex of rule 10's bridge case, 0 if none
  int k_delta = 0;
};

struct TwoWayOutcome {
  TwoWayApplication app;
  SignedGraph graph;
  int k = 0;
};

// All four rules expect: s within g, g - s a forest of cliques carrying only
// negative edges. Each returns the first application found on the given
// block (component for rule 11) of g - s, or nothing.

// Deletes two members of an interior class of the block that shares its
// signed neighborhood in S and outweighs (|V(C)| + |N(X) cap S|) / 2.
std::optional<TwoWayOutcome> rule8(const SignedGraph& g, int k, std::span<const int> s,
                                   std::span<const int> block);

// Deletes one vertex of a half-sized S-free interior set of an even block.
std::optional<TwoWayOutcome> rule9(const SignedGraph& g, int k, std::span<const int> s,
                                   std::span<const int> block);

// Triangle block {x,y,u} with N_g(u) = {x,y}: contracts it to a fresh vertex
// when xy bridges g - u, otherwise removes u and the edge xy.
std::optional<TwoWayOutcome> rule10(const SignedGraph& g, int k, std::span<const int> s,
                                    std::span<const int> block);

// Component of g - s touching exactly one vertex of s: resolved by one MCWV
// run and deleted, paying its slack over the lower bound out of k.
std::optional<TwoWayOutcome> rule11(const SignedGraph& g, int k, std::span<const int> s,
                                    std::span<const int> component);

// First applicable rule in fixed priority 8, 9, 10, 11 over blocks ordered
// by smallest vertex.
std::optional<TwoWayOutcome> find_two_way(const SignedGraph& g, int k, std::span<const int> s);

// Every single application of every rule. Test and audit support.
std::vector<TwoWayOutcome> enumerate_two_way(const SignedGraph& g, int k, std::span<const int> s);

// Yes-instance certificates of a fully reduced instance, checked in order:
// total interior contact with S over non-path blocks, longest pure path,
// oversized block. Returns the first one that fires.
std::optional<YesReason> thresholds(const SignedGraph& g, int k, std::span<const int> s);

// Vertex bound of the emitted kernel:
// 3k + 24k^2(8k-3) + 24k(8k-3) + 3k(8k-3)(8k+1).
long long size_bound(int k);

struct KernelOutcome {
  bool resolved_yes = false;
  YesReason reason = YesReason::k_nonpositive;  // valid when resolved_yes
  SignedGraph kernel;                           // valid otherwise
  int kernel_k = 0;
  std::vector<int> marked_set;  // S, annotation for the emitted kernel
  std::vector<TwoWayApplication> trace;
};

// Full pipeline: rules 1..7 for S (early yes when k is exhausted), switch
// g - S all-negative, rules 8..11 exhaustively, threshold checks, emit.
// Internal invariant breaches (g - S not a forest of cliques, a positive
// edge outside S, lost connectivity, kernel above the size bound) abort
// with the trace; they signal a bug, never a bad input.
KernelOutcome kernelize(const SignedGraph& g, int k);

// `rule=<id> deleted=<list> added=<z|-> kdelta=<d>`
std::string trace_line(const TwoWayApplication& app);

}  // namespace sgmc::kernel
