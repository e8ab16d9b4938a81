/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "signed_graph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace sgmc {

namespace {

std::string edge_str(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

SignedGraph SignedGraph::build(int n, std::span<const RawEdge> edges) {
  if (n < 0) fail(Errc::invalid_argument, "vertex count must be nonnegative");
  SignedGraph g;
  g.vertices_.resize(n);
  for (int i = 0; i < n; ++i) g.vertices_[i] = i + 1;
  g.present_.assign(n + 1, 0);
  g.adj_.assign(n + 1, {});
  for (int v = 1; v <= n; ++v) g.present_[v] = 1;

  // Count copies per (pair, sign): a (+,-) pair cancels, two copies of the
  // same sign are not a sanctioned input.
  std::map<std::pair<int, int>, std::pair<int, int>> counts;
  for (const RawEdge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      fail(Errc::invalid_argument, "edge endpoint out of range: " + edge_str(e.u, e.v));
    if (e.u == e.v) fail(Errc::invalid_argument, "self-loop rejected at vertex " + std::to_string(e.u));
    auto key = std::minmax(e.u, e.v);
    auto& c = counts[{key.first, key.second}];
    int& slot = (e.sign == Sign::positive) ? c.first : c.second;
    if (++slot > 1)
      fail(Errc::invalid_argument, "parallel edges of the same sign rejected: " + edge_str(e.u, e.v));
  }
  for (const auto& [key, c] : counts) {
    if (c.first == 1 && c.second == 1) continue;  // opposite-sign pair cancels
    g.add_edge_unchecked(key.first, key.second, c.first == 1 ? Sign::positive : Sign::negative);
  }
  g.sort_adjacency();
  return g;
}

SignedGraph SignedGraph::from_parts(std::vector<int> vertices, std::span<const RawEdge> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(Errc::internal, "from_parts: duplicate vertex");
  if (!vertices.empty() && vertices.front() < 1)
    fail(Errc::internal, "from_parts: vertex identifiers must be positive");
  SignedGraph g;
  int maxid = vertices.empty() ? 0 : vertices.back();
  g.vertices_ = std::move(vertices);
  g.present_.assign(maxid + 1, 0);
  g.adj_.assign(maxid + 1, {});
  for (int v : g.vertices_) g.present_[v] = 1;
  for (const RawEdge& e : edges) {
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || e.u == e.v)
      fail(Errc::internal, "from_parts: bad edge " + edge_str(e.u, e.v));
    g.add_edge_unchecked(e.u, e.v, e.sign);
  }
  g.sort_adjacency();
  for (int v : g.vertices_) {
    const auto& nb = g.adj_[v];
    for (std::size_t i = 1; i < nb.size(); ++i)
      if (nb[i].v == nb[i - 1].v) fail(Errc::internal, "from_parts: parallel edge at " + std::to_string(v));
  }
  return g;
}

bool SignedGraph::has_vertex(int v) const {
  return v >= 1 && static_cast<std::size_t>(v) < present_.size() && present_[v];
}

bool SignedGraph::has_edge(int u, int v) const { return edge_sign(u, v).has_value(); }

std::optional<Sign> SignedGraph::edge_sign(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Nbr& a, int b) { return a.v < b; });
  if (it != nb.end() && it->v == v) return it->sign;
  return std::nullopt;
}

const std::vector<SignedGraph::Nbr>& SignedGraph::neighbors(int v) const {
  require_vertex(v);
  return adj_[v];
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v : vertices_)
    for (const Nbr& nb : adj_[v])
      if (nb.v > v) out.push_back({v, nb.v, nb.sign});
  return out;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.vertices_ != b.vertices_ || a.m_ != b.m_) return false;
  for (int v : a.vertices_)
    if (a.adj_[v].size() != b.adj_[v].size() ||
        !std::equal(a.adj_[v].begin(), a.adj_[v].end(), b.adj_[v].begin(),
                    [](const SignedGraph::Nbr& x, const SignedGraph::Nbr& y) {
                      return x.v == y.v && x.sign == y.sign;
                    }))
      return false;
  return true;
}

void SignedGraph::require_vertex(int v) const {
  if (!has_vertex(v)) fail(Errc::invalid_argument, "unknown vertex " + std::to_string(v));
}

void SignedGraph::add_edge_unchecked(int u, int v, Sign s) {
  adj_[u].push_back({v, s});
  adj_[v].push_back({u, s});
  ++m_;
}

void SignedGraph::sort_adjacency() {
  for (auto& nb : adj_)
    std::sort(nb.begin(), nb.end(), [](const Nbr& a, const Nbr& b) { return a.v < b.v; });
}

void Assignment::assign(int v, int s) {
  if (v < 1) fail(Errc::invalid_argument, "assignment vertex must be positive");
  if (s != 1 && s != 2) fail(Errc::invalid_argument, "assignment side must be 1 or 2");
  if (static_cast<std::size_t>(v) >= side_.size()) side_.resize(v + 1, 0);
  side_[v] = static_cast<std::uint8_t>(s);
}

void Assignment::flip(int v) {
  int s = side(v);
  if (s == 0) fail(Errc::invalid_argument, "cannot flip unassigned vertex " + std::to_string(v));
  side_[v] = static_cast<std::uint8_t>(3 - s);
}

bool Assignment::total_on(const SignedGraph& g) const {
  for (int v : g.vertices())
    if (side(v) == 0) return false;
  return true;
}

bool lex_less(const Assignment& a, const Assignment& b, std::span<const int> order) {
  for (int v : order) {
    int sa = a.side(v), sb = b.side(v);
    if (sa != sb) return sa < sb;
  }
  return false;
}

SignedGraph switched(const SignedGraph& g, std::span<const int> w) {
  std::vector<char> in_w(g.max_vertex_id() + 1, 0);
  for (int v : w) {
    if (!g.has_vertex(v)) fail(Errc::invalid_argument, "switch set contains unknown vertex " + std::to_string(v));
    in_w[v] = 1;
  }
  std::vector<RawEdge> es;
  es.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const SignedEdge& e : g.edges()) {
    bool crossing = in_w[e.u] != in_w[e.v];
    es.push_back({e.u, e.v, crossing ? flipped(e.sign) : e.sign});
  }
  return SignedGraph::from_parts(g.vertices(), es);
}

SignedGraph dual(const SignedGraph& g) {
  std::vector<RawEdge> es;
  es.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const SignedEdge& e : g.edges()) es.push_back({e.u, e.v, flipped(e.sign)});
  return SignedGraph::from_parts(g.vertices(), es);
}

BalanceWitness is_balanced(const SignedGraph& g) {
  int maxid = g.max_vertex_id();
  std::vector<std::uint8_t> side(maxid + 1, 0);
  std::vector<int> parent(maxid + 1, 0), depth(maxid + 1, 0);

  for (int root : g.vertices()) {
    if (side[root] != 0) continue;
    side[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(u)) {
        std::uint8_t expected =
            (nb.sign == Sign::positive) ? side[u] : static_cast<std::uint8_t>(3 - side[u]);
        if (side[nb.v] == 0) {
          side[nb.v] = expected;
          parent[nb.v] = u;
          depth[nb.v] = depth[u] + 1;
          stack.push_back(nb.v);
        } else if (side[nb.v] != expected) {
          // Close the cycle through the forest: u .. lca .. nb.v plus edge (nb.v, u).
          BalanceWitness w;
          w.balanced = false;
          int a = u, b = nb.v;
          std::vector<int> up_a{a}, up_b{b};
          while (depth[a] > depth[b]) up_a.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_b.push_back(b = parent[b]);
          while (a != b) {
            up_a.push_back(a = parent[a]);
            up_b.push_back(b = parent[b]);
          }
          // up_a ends at the lca, up_b too; stitch them into one cycle.
          w.odd_cycle = up_a;
          for (auto it = up_b.rbegin(); it != up_b.rend(); ++it)
            if (*it != a) w.odd_cycle.push_back(*it);
          return w;
        }
      }
    }
  }
  BalanceWitness w;
  w.balanced = true;
  for (int v : g.vertices())
    if (side[v] == 2) w.switch_set.push_back(v);
  return w;
}

QuarterBound quarter_bound(const SignedGraph& g) {
  QuarterBound qb;
  qb.components = static_cast<int>(components(g).size());
  qb.quarters = 2 * g.edge_count() + g.vertex_count() - qb.components;
  return qb;
}

long long consistent_edges(const SignedGraph& g, const Assignment& a) {
  if (!a.total_on(g)) fail(Errc::invalid_argument, "assignment is not total over the vertex set");
  long long count = 0;
  for (int v : g.vertices())
    for (const auto& nb : g.neighbors(v)) {
      if (nb.v < v) continue;
      bool same = a.side(v) == a.side(nb.v);
      if (same == (nb.sign == Sign::positive)) ++count;
    }
  return count;
}

std::vector<std::vector<int>> components(const SignedGraph& g) {
  std::vector<char> seen(g.max_vertex_id() + 1, 0);
  std::vector<std::vector<int>> out;
  for (int root : g.vertices()) {
    if (seen[root]) continue;
    std::vector<int> comp, stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& nb : g.neighbors(u))
        if (!seen[nb.v]) {
          seen[nb.v] = 1;
          stack.push_back(nb.v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SignedGraph& g) { return components(g).size() <= 1; }

SignedGraph induced(const SignedGraph& g, std::span<const int> keep) {
  std::vector<int> vs(keep.begin(), keep.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (!g.has_vertex(v)) fail(Errc::invalid_argument, "induced: unknown vertex " + std::to_string(v));
  std::vector<char> in(g.max_vertex_id() + 1, 0);
  for (int v : vs) in[v] = 1;
  std::vector<RawEdge> es;
  for (int v : vs)
    for (const auto& nb : g.neighbors(v))
      if (nb.v > v && in[nb.v]) es.push_back({v, nb.v, nb.sign});
  return SignedGraph::from_parts(std::move(vs), es);
}

SignedGraph delete_vertices(const SignedGraph& g, std::span<const int> drop) {
  std::vector<char> gone(g.max_vertex_id() + 1, 0);
  for (int v : drop) {
    if (!g.has_vertex(v))
      fail(Errc::invalid_argument, "delete_vertices: unknown vertex " + std::to_string(v));
    gone[v] = 1;
  }
  std::vector<int> vs;
  vs.reserve(g.vertices().size());
  for (int v : g.vertices())
    if (!gone[v]) vs.push_back(v);
  return induced(g, vs);
}

SignedGraph without_edge(const SignedGraph& g, int u, int v) {
  if (!g.has_edge(u, v)) fail(Errc::invalid_argument, "without_edge: no edge " + edge_str(u, v));
  std::vector<RawEdge> es;
  for (const SignedEdge& e : g.edges())
    if (!(e.u == std::min(u, v) && e.v == std::max(u, v))) es.push_back({e.u, e.v, e.sign});
  return SignedGraph::from_parts(g.vertices(), es);
}

}  // namespace sgmc
