/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "signed_graph.hpp"

namespace sgmc::mcwv {

// Max-Cut-with-Weighted-Vertices: maximize the number of cut edges plus
// side-dependent vertex payoffs,
//   sum_{xy in E} |f(x)-f(y)| + sum_{f(x)=1} w1(x) + sum_{f(x)=2} w2(x).
// Edge signs of the carrier graph are ignored. Weight vectors are indexed by
// vertex id; missing entries count as zero.
struct WeightedInstance {
  SignedGraph graph;
  std::vector<long long> w1;
  std::vector<long long> w2;
};

inline long long weight_at(const std::vector<long long>& w, int v) {
  return static_cast<std::size_t>(v) < w.size() ? w[v] : 0;
}

struct Solution {
  long long value = 0;
  Assignment assignment;
};

// Exact polynomial dynamic program. Requires the carrier graph to be a
// forest of cliques; rejects anything else.
Solution solve(const WeightedInstance& inst);

}  // namespace sgmc::mcwv
