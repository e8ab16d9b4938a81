/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"

namespace sgmc {

enum class Sign : std::uint8_t { positive, negative };

inline Sign flipped(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

struct RawEdge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::positive;
};

struct SignedEdge {
  int u = 0;  // always u < v
  int v = 0;
  Sign sign = Sign::positive;
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Simple undirected graph with a sign per edge.
//
// Vertex identifiers are positive integers and stay stable across vertex
// deletions, so the vertex set of a derived graph may be non-contiguous.
// Values are immutable after construction; every operation returns a new
// graph, which makes sharing across workers safe.
class SignedGraph {
 public:
  struct Nbr {
    int v = 0;
    Sign sign = Sign::positive;
  };

  SignedGraph() = default;

  // Vertices 1..n. Parallel edges of opposite sign cancel pairwise; parallel
  // edges of the same sign and self-loops are rejected.
  static SignedGraph build(int n, std::span<const RawEdge> edges);

  // Explicit vertex set (positive identifiers, duplicates rejected). Edges
  // must be simple and connect present vertices; no cancellation happens.
  static SignedGraph from_parts(std::vector<int> vertices, std::span<const RawEdge> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  long long edge_count() const { return m_; }
  const std::vector<int>& vertices() const { return vertices_; }
  int max_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back(); }

  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;
  std::optional<Sign> edge_sign(int u, int v) const;

  // Sorted by neighbor id.
  const std::vector<Nbr>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // All edges, normalized to u < v and sorted lexicographically.
  std::vector<SignedEdge> edges() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  std::vector<int> vertices_;          // sorted ascending
  std::vector<char> present_;          // indexed by vertex id
  std::vector<std::vector<Nbr>> adj_;  // indexed by vertex id
  long long m_ = 0;

  void require_vertex(int v) const;
  void add_edge_unchecked(int u, int v, Sign s);
  void sort_adjacency();
};

// vertex -> side (1 or 2); 0 means unassigned.
class Assignment {
 public:
  Assignment() = default;

  int side(int v) const {
    return (v >= 0 && static_cast<std::size_t>(v) < side_.size()) ? side_[v] : 0;
  }
  void assign(int v, int s);
  void flip(int v);
  bool total_on(const SignedGraph& g) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> side_;
};

// True when a precedes b lexicographically over the given vertex order
// (side 1 before side 2).
bool lex_less(const Assignment& a, const Assignment& b, std::span<const int> order);

// Flip the sign of every edge with exactly one endpoint in w.
SignedGraph switched(const SignedGraph& g, std::span<const int> w);

// Flip the sign of every edge. Involution.
SignedGraph dual(const SignedGraph& g);

struct BalanceWitness {
  bool balanced = false;
  // balanced: switching this set leaves no negative edge.
  std::vector<int> switch_set;
  // unbalanced: closed walk (as a vertex cycle) with an odd number of
  // negative edges.
  std::vector<int> odd_cycle;
};

// Spanning-forest 2-labeling; a failed non-tree edge closes the witness cycle.
BalanceWitness is_balanced(const SignedGraph& g);

// Four times the Poljak-Turzik lower bound, kept exact in integer quarters:
// quarters = 2m + n - t for a graph with t components. The empty graph has
// t = 0 and quarters = 0.
struct QuarterBound {
  long long quarters = 0;
  int components = 0;
};
QuarterBound quarter_bound(const SignedGraph& g);

// Number of edges consistent with the two-sided assignment: positive edges
// within a side plus negative edges across sides. This is the size of the
// balanced subgraph induced by the assignment.
long long consistent_edges(const SignedGraph& g, const Assignment& a);

// Connected components ordered by smallest vertex; each sorted.
std::vector<std::vector<int>> components(const SignedGraph& g);

// The empty graph counts as connected.
bool is_connected(const SignedGraph& g);

SignedGraph induced(const SignedGraph& g, std::span<const int> keep);
SignedGraph delete_vertices(const SignedGraph& g, std::span<const int> drop);
SignedGraph without_edge(const SignedGraph& g, int u, int v);

}  // namespace sgmc
