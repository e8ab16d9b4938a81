/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mcwv.hpp"

#include <algorithm>
#include <limits>

#include "decomposition.hpp"

namespace sgmc::mcwv {

namespace {

// Bottom-up over the block-cut forest. Each cut vertex carries two
// accumulated values (its subtree optimum with the vertex forced to side 1
// or 2), folded into effective weights; a vertex's own weight is charged in
// the block closest to the root that contains it. Inside a clique of size q,
// for each side-1 cardinality a the cut contribution is a*(q-a) and the best
// vertex selection takes the top-a by (w1 - w2), ties by identifier.
struct CliqueDp {
  const SignedGraph& h;
  const decomp::BlockDecomposition& bd;
  std::vector<long long> eff1, eff2;
  std::vector<char> block_done;
  Assignment sides;

  CliqueDp(const SignedGraph& graph, const decomp::BlockDecomposition& decomposition,
           const WeightedInstance& inst)
      : h(graph), bd(decomposition) {
    eff1.assign(h.max_vertex_id() + 1, 0);
    eff2.assign(h.max_vertex_id() + 1, 0);
    for (int v : h.vertices()) {
      eff1[v] = weight_at(inst.w1, v);
      eff2[v] = weight_at(inst.w2, v);
    }
    block_done.assign(bd.blocks.size(), 0);
  }

  // Free vertices of a block sorted by descending (eff1 - eff2), ties by id.
  std::vector<int> ordered_free(int bi, int parent) const {
    std::vector<int> free;
    for (int v : bd.blocks[bi])
      if (v != parent) free.push_back(v);
    std::sort(free.begin(), free.end(), [&](int a, int b) {
      long long da = eff1[a] - eff2[a], db = eff1[b] - eff2[b];
      if (da != db) return da > db;
      return a < b;
    });
    return free;
  }

  // Best value of the block given `extra` vertices already forced to side 1
  // among the q slots (0 at the root, the parent's side otherwise); returns
  // the chosen number of free side-1 vertices through *best_a.
  long long block_best(const std::vector<int>& free, int q, int extra, int* best_a) const {
    long long base = 0;
    for (int v : free) base += eff2[v];
    long long best = std::numeric_limits<long long>::min();
    long long prefix = 0;
    int f = static_cast<int>(free.size());
    for (int a = 0; a <= f; ++a) {
      if (a > 0) prefix += eff1[free[a - 1]] - eff2[free[a - 1]];
      long long ones = a + extra;
      long long cut = ones * (q - ones);
      long long value = cut + base + prefix;
      if (value > best) {
        best = value;
        *best_a = a;
      }
    }
    return best;
  }

  // Post-order: fold children of every non-parent vertex, then account this
  // block into the parent's effective weights.
  void process(int bi, int parent) {
    block_done[bi] = 1;
    for (int v : bd.blocks[bi]) {
      if (v == parent) continue;
      for (int child : bd.containing(v)) {
        if (block_done[child]) continue;
        process(child, v);
        auto free = ordered_free(child, v);
        int q = static_cast<int>(bd.blocks[child].size());
        int a;
        eff1[v] += block_best(free, q, 1, &a);
        eff2[v] += block_best(free, q, 0, &a);
      }
    }
  }

  // Top-down: fix sides in this block, then descend into children with the
  // cut vertices' sides forced.
  void assign(int bi, int parent, int parent_side) {
    auto free = ordered_free(bi, parent);
    int q = static_cast<int>(bd.blocks[bi].size());
    int best_a = 0;
    block_best(free, q, parent != 0 && parent_side == 1 ? 1 : 0, &best_a);
    for (int i = 0; i < static_cast<int>(free.size()); ++i)
      sides.assign(free[i], i < best_a ? 1 : 2);
    for (int v : free)
      for (int child : bd.containing(v)) {
        if (block_done[child]) continue;
        block_done[child] = 1;
        assign(child, v, sides.side(v));
      }
  }

  Solution run() {
    Solution sol;
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
      if (block_done[bi]) continue;
      process(static_cast<int>(bi), 0);
      auto free = ordered_free(static_cast<int>(bi), 0);
      int a;
      sol.value += block_best(free, static_cast<int>(bd.blocks[bi].size()), 0, &a);
    }
    block_done.assign(bd.blocks.size(), 0);
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
      if (block_done[bi]) continue;
      block_done[bi] = 1;
      assign(static_cast<int>(bi), 0, 0);
    }
    sol.assignment = sides;
    return sol;
  }
};

}  // namespace

Solution solve(const WeightedInstance& inst) {
  if (!decomp::is_forest_of_cliques(inst.graph))
    fail(Errc::precondition_failed, "mcwv: carrier graph is not a forest of cliques");
  auto bd = decomp::blocks(inst.graph);
  CliqueDp dp(inst.graph, bd, inst);
  return dp.run();
}

}  // namespace sgmc::mcwv
