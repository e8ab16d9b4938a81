/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "oracle.hpp"

#include <bit>
#include <string>

namespace sgmc::oracle {

namespace {

void check_limit(const SignedGraph& g, int vertex_limit) {
  if (g.vertex_count() > vertex_limit)
    fail(Errc::limit_exceeded, "oracle limit exceeded: graph has " +
                                   std::to_string(g.vertex_count()) + " vertices, limit is " +
                                   std::to_string(vertex_limit));
}

}  // namespace

long long beta(const SignedGraph& g, int vertex_limit) {
  check_limit(g, vertex_limit);
  const auto& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  if (n == 0) return 0;

  std::vector<std::uint8_t> side(g.max_vertex_id() + 1, 1);
  long long current = 0;
  for (const SignedEdge& e : g.edges())
    if (e.sign == Sign::positive) ++current;  // everything starts on side 1

  long long best = current;
  // Gray-code walk over the 2^(n-1) assignments of vs[1..]; flipping one
  // vertex toggles the consistency of exactly its incident edges.
  std::uint64_t steps = 1ull << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    int v = vs[1 + std::countr_zero(i)];
    for (const auto& nb : g.neighbors(v)) {
      bool same = side[v] == side[nb.v];
      bool was_consistent = same == (nb.sign == Sign::positive);
      current += was_consistent ? -1 : 1;
    }
    side[v] = static_cast<std::uint8_t>(3 - side[v]);
    if (current > best) best = current;
  }
  return best;
}

long long mcwv_value(const mcwv::WeightedInstance& inst, int vertex_limit) {
  const SignedGraph& g = inst.graph;
  check_limit(g, vertex_limit);
  const auto& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  if (n == 0) return 0;

  std::vector<std::uint8_t> side(g.max_vertex_id() + 1, 1);
  long long current = 0;
  for (int v : vs) current += mcwv::weight_at(inst.w1, v);

  long long best = current;
  std::uint64_t steps = 1ull << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    int v = vs[std::countr_zero(i)];
    for (const auto& nb : g.neighbors(v)) {
      bool cut = side[v] != side[nb.v];
      current += cut ? -1 : 1;
    }
    if (side[v] == 1) {
      current += mcwv::weight_at(inst.w2, v) - mcwv::weight_at(inst.w1, v);
      side[v] = 2;
    } else {
      current += mcwv::weight_at(inst.w1, v) - mcwv::weight_at(inst.w2, v);
      side[v] = 1;
    }
    if (current > best) best = current;
  }
  return best;
}

bool decide(const SignedGraph& g, int k, int vertex_limit) {
  return 4 * beta(g, vertex_limit) >= quarter_bound(g).quarters + k;
}

}  // namespace sgmc::oracle
