/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "mcwv.hpp"
#include "signed_graph.hpp"

namespace sgmc::oracle {

// Plain exponential enumeration kept deliberately simple; these are the
// reference answers the rest of the library is tested against.

inline constexpr int kDefaultVertexLimit = 24;

// Maximum number of edges in a balanced subgraph, by enumerating all
// 2^(n-1) assignments with the smallest vertex pinned to side 1.
long long beta(const SignedGraph& g, int vertex_limit = kDefaultVertexLimit);

// Exact optimum of a Max-Cut-with-Weighted-Vertices instance over all 2^n
// assignments (no structural assumptions on the carrier graph).
long long mcwv_value(const mcwv::WeightedInstance& inst, int vertex_limit = kDefaultVertexLimit);

// 4*beta(G) >= quarter_bound(G) + k.
bool decide(const SignedGraph& g, int k, int vertex_limit = kDefaultVertexLimit);

}  // namespace sgmc::oracle
