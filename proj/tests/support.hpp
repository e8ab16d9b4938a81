#pragma once

// Shared helpers for the test suites: exhaustive small-graph enumeration,
// seeded random instances, and simple-cycle enumeration used as an
// independent oracle for balance and forest-of-cliques checks.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "core/mcwv.hpp"
#include "core/signed_graph.hpp"

namespace test_support {

using sgmc::RawEdge;
using sgmc::Sign;
using sgmc::SignedGraph;

inline SignedGraph graph_of(int n, std::initializer_list<std::tuple<int, int, char>> edge_list) {
  std::vector<RawEdge> edges;
  for (auto [u, v, s] : edge_list)
    edges.push_back({u, v, s == '+' ? Sign::positive : Sign::negative});
  return SignedGraph::build(n, edges);
}

inline SignedGraph complete_graph(int n, Sign sign) {
  std::vector<RawEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v, sign});
  return SignedGraph::build(n, edges);
}

// Every connected labeled signed graph on exactly n vertices. With
// negative_only set, only the all-negative sign pattern per shape.
inline void for_each_connected_signed(int n, bool negative_only,
                                      const std::function<void(const SignedGraph&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
  int mmax = static_cast<int>(slots.size());
  for (unsigned shape = 0; shape < (1u << mmax); ++shape) {
    std::vector<std::pair<int, int>> present;
    for (int i = 0; i < mmax; ++i)
      if (shape & (1u << i)) present.push_back(slots[i]);
    unsigned sign_patterns = negative_only ? 1u : (1u << present.size());
    bool connectivity_known = false, connected = false;
    for (unsigned signs = 0; signs < sign_patterns; ++signs) {
      std::vector<RawEdge> edges;
      for (std::size_t i = 0; i < present.size(); ++i)
        edges.push_back({present[i].first, present[i].second,
                         negative_only || !(signs & (1u << i)) ? Sign::negative
                                                               : Sign::positive});
      SignedGraph g = SignedGraph::build(n, edges);
      if (!connectivity_known) {
        connected = sgmc::is_connected(g);
        connectivity_known = true;
      }
      if (!connected) break;
      fn(g);
    }
  }
}

// Connected random signed graph via retries.
inline SignedGraph random_connected(std::mt19937_64& rng, int n, double p, double neg) {
  auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  while (true) {
    std::vector<RawEdge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (u01() < p)
          edges.push_back({u, v, u01() < neg ? Sign::negative : Sign::positive});
    SignedGraph g = SignedGraph::build(n, edges);
    if (sgmc::is_connected(g)) return g;
  }
}

// Random forest of cliques with random nonnegative weights (for the MCWV
// oracle-equivalence tests). Components and isolated vertices included.
inline sgmc::mcwv::WeightedInstance random_weighted_forest(std::mt19937_64& rng, int max_n,
                                                           int max_weight) {
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  std::vector<RawEdge> edges;
  int built = 0;
  std::vector<int> anchors;  // vertices available as clique attachment points
  while (built < n) {
    int size = 1 + static_cast<int>(rng() % 4);
    size = std::min(size, n - built);
    std::vector<int> members;
    bool attach = !anchors.empty() && (rng() % 3 != 0);
    if (attach) members.push_back(anchors[rng() % anchors.size()]);
    for (int i = 0; i < size; ++i) members.push_back(++built);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        edges.push_back({members[i], members[j], Sign::negative});
    for (int v : members) anchors.push_back(v);
  }
  sgmc::mcwv::WeightedInstance inst;
  inst.graph = SignedGraph::build(n, edges);
  inst.w1.assign(n + 1, 0);
  inst.w2.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    inst.w1[v] = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_weight + 1));
    inst.w2[v] = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_weight + 1));
  }
  return inst;
}

// All simple cycles (as vertex sequences, length >= 3), each reported once.
inline std::vector<std::vector<int>> simple_cycles(const SignedGraph& g) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> on_path(g.max_vertex_id() + 1, 0);

  std::function<void(int, int)> extend = [&](int start, int current) {
    for (const auto& nb : g.neighbors(current)) {
      if (nb.v == start && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);  // each orientation once
        continue;
      }
      if (nb.v <= start || on_path[nb.v]) continue;  // smallest vertex anchors the cycle
      on_path[nb.v] = 1;
      path.push_back(nb.v);
      extend(start, nb.v);
      path.pop_back();
      on_path[nb.v] = 0;
    }
  };

  for (int start : g.vertices()) {
    path = {start};
    on_path.assign(g.max_vertex_id() + 1, 0);
    on_path[start] = 1;
    extend(start, start);
  }
  return cycles;
}

inline int cycle_negative_edges(const SignedGraph& g, const std::vector<int>& cycle) {
  int negatives = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto sign = g.edge_sign(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (sign && *sign == Sign::negative) ++negatives;
  }
  return negatives;
}

}  // namespace test_support
