/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "decomposition.hpp"

#include <algorithm>
#include <string>

namespace sgmc::decomp {

namespace {

struct BlockFinder {
  const SignedGraph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> found;
  int timer = 0;

  explicit BlockFinder(const SignedGraph& graph)
      : g(graph),
        disc(graph.max_vertex_id() + 1, 0),
        low(graph.max_vertex_id() + 1, 0),
        is_cut(graph.max_vertex_id() + 1, 0) {}

  void pop_block(int u, int w) {
    std::vector<int> verts;
    std::pair<int, int> top;
    do {
      top = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(top.first);
      verts.push_back(top.second);
    } while (top != std::make_pair(u, w));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    found.push_back(std::move(verts));
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    for (const auto& nb : g.neighbors(u)) {
      int w = nb.v;
      if (disc[w] == 0) {
        ++children;
        edge_stack.push_back({u, w});
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != 0) is_cut[u] = 1;
          pop_block(u, w);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        edge_stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent == 0 && children >= 2) is_cut[u] = 1;
    if (parent == 0 && children == 0) found.push_back({u});  // isolated vertex
  }
};

}  // namespace

bool BlockDecomposition::is_cut_vertex(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

const std::vector<int>& BlockDecomposition::containing(int v) const {
  static const std::vector<int> empty;
  if (v < 0 || static_cast<std::size_t>(v) >= blocks_of.size()) return empty;
  return blocks_of[v];
}

BlockDecomposition blocks(const SignedGraph& g) {
  BlockFinder finder(g);
  for (int v : g.vertices())
    if (finder.disc[v] == 0) finder.dfs(v, 0);

  BlockDecomposition bd;
  bd.blocks = std::move(finder.found);
  std::sort(bd.blocks.begin(), bd.blocks.end());
  for (int v : g.vertices())
    if (finder.is_cut[v]) bd.cut_vertices.push_back(v);
  bd.blocks_of.assign(g.max_vertex_id() + 1, {});
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    for (int v : bd.blocks[i]) bd.blocks_of[v].push_back(static_cast<int>(i));
  return bd;
}

bool is_forest_of_cliques(const SignedGraph& g) {
  BlockDecomposition bd = blocks(g);
  for (const auto& block : bd.blocks) {
    // Count edges inside the block; a clique on q vertices has q(q-1)/2.
    std::vector<char> in(g.max_vertex_id() + 1, 0);
    for (int v : block) in[v] = 1;
    long long inside = 0;
    for (int v : block)
      for (const auto& nb : g.neighbors(v))
        if (nb.v > v && in[nb.v]) ++inside;
    long long q = static_cast<long long>(block.size());
    if (inside != q * (q - 1) / 2) return false;
  }
  return true;
}

BlockLabels label_blocks(const SignedGraph& g, std::span<const int> s) {
  for (int v : s)
    if (!g.has_vertex(v)) fail(Errc::invalid_argument, "label_blocks: unknown vertex " + std::to_string(v));

  BlockLabels lab;
  SignedGraph h = delete_vertices(g, s);
  lab.decomposition = blocks(h);
  const auto& bd = lab.decomposition;

  std::vector<char> in_s(g.max_vertex_id() + 1, 0);
  for (int v : s) in_s[v] = 1;
  // N_g(S): non-S vertices with a neighbor in S.
  std::vector<char> touches_s(g.max_vertex_id() + 1, 0);
  for (int v : s)
    for (const auto& nb : g.neighbors(v))
      if (!in_s[nb.v]) touches_s[nb.v] = 1;

  std::size_t nblocks = bd.blocks.size();
  lab.interior.resize(nblocks);
  lab.exterior.resize(nblocks);
  lab.special.assign(nblocks, 0);
  lab.path_block.assign(nblocks, 0);
  lab.leaf_block.assign(nblocks, 0);

  for (std::size_t i = 0; i < nblocks; ++i) {
    const auto& block = bd.blocks[i];
    std::vector<char> in_block(h.max_vertex_id() + 1, 0);
    for (int v : block) in_block[v] = 1;
    for (int v : block) {
      bool inside = true;
      for (const auto& nb : h.neighbors(v))
        if (!in_block[nb.v]) {
          inside = false;
          break;
        }
      (inside ? lab.interior[i] : lab.exterior[i]).push_back(v);
    }
    for (int v : lab.interior[i])
      if (touches_s[v]) {
        lab.special[i] = 1;
        break;
      }
    lab.path_block[i] = block.size() == 2 && lab.exterior[i].size() == 2;
    lab.leaf_block[i] = lab.exterior[i].size() <= 1;
  }

  // Path vertices: contained only in path blocks.
  std::vector<char> is_pv(h.max_vertex_id() + 1, 0);
  for (int v : h.vertices()) {
    const auto& owners = bd.containing(v);
    bool all_path = !owners.empty();
    for (int bi : owners)
      if (!lab.path_block[bi]) {
        all_path = false;
        break;
      }
    if (all_path) {
      is_pv[v] = 1;
      lab.path_vertices.push_back(v);
    }
  }

  // Pure paths: chains grown through degree-2 path vertices; endpoints of any
  // degree are absorbed, everything stays vertex-disjoint.
  std::vector<char> used(h.max_vertex_id() + 1, 0);
  auto walk = [&](int prev, int cur, std::vector<int>& out) {
    while (true) {
      out.push_back(cur);
      used[cur] = 1;
      if (h.degree(cur) != 2) return;
      const auto& nb = h.neighbors(cur);
      int nxt = (nb[0].v == prev) ? nb[1].v : nb[0].v;
      if (!is_pv[nxt] || used[nxt]) return;
      prev = cur;
      cur = nxt;
    }
  };
  for (int v : lab.path_vertices) {
    if (used[v] || h.degree(v) != 2) continue;
    used[v] = 1;
    const auto& nb = h.neighbors(v);
    std::vector<int> left, right;
    if (is_pv[nb[0].v] && !used[nb[0].v]) walk(v, nb[0].v, left);
    if (is_pv[nb[1].v] && !used[nb[1].v]) walk(v, nb[1].v, right);
    std::vector<int> chain(left.rbegin(), left.rend());
    chain.push_back(v);
    chain.insert(chain.end(), right.begin(), right.end());
    lab.pure_paths.push_back(std::move(chain));
  }
  for (int v : lab.path_vertices)
    if (!used[v]) {
      used[v] = 1;
      lab.pure_paths.push_back({v});
    }
  return lab;
}

std::optional<Triangle> positive_triangle(const SignedGraph& g, std::span<const int> within) {
  std::vector<char> in(g.max_vertex_id() + 1, 0);
  for (int v : within) {
    if (!g.has_vertex(v))
      fail(Errc::invalid_argument, "positive_triangle: unknown vertex " + std::to_string(v));
    in[v] = 1;
  }
  std::vector<int> vs(within.begin(), within.end());
  std::sort(vs.begin(), vs.end());
  for (int a : vs) {
    const auto& na = g.neighbors(a);
    for (const auto& nb : na) {
      int b = nb.v;
      if (b <= a || !in[b]) continue;
      for (const auto& nc : na) {
        int c = nc.v;
        if (c <= b || !in[c]) continue;
        auto bc = g.edge_sign(b, c);
        if (!bc) continue;
        int negatives = (nb.sign == Sign::negative) + (nc.sign == Sign::negative) +
                        (*bc == Sign::negative);
        if (negatives % 2 == 0) return Triangle{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> switch_to_all_negative(const SignedGraph& g, std::span<const int> within) {
  if (auto t = positive_triangle(g, within))
    fail(Errc::precondition_failed,
         "switch_to_all_negative: positive triangle {" + std::to_string(t->a) + "," +
             std::to_string(t->b) + "," + std::to_string(t->c) + "} inside the set");
  // The dual of the restriction is balanced exactly when the restriction can
  // be switched all-negative; the balance witness is the switch set.
  SignedGraph restricted = induced(g, within);
  BalanceWitness w = is_balanced(dual(restricted));
  if (!w.balanced)
    fail(Errc::precondition_failed,
         "switch_to_all_negative: restriction is not chordal (odd obstruction without a "
         "positive triangle)");
  return w.switch_set;
}

}  // namespace sgmc::decomp
