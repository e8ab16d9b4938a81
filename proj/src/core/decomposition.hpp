/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "signed_graph.hpp"

namespace sgmc::decomp {

// Blocks are maximal 2-connected subgraphs, bridge edges, or single-vertex
// components. Every edge lies in exactly one block; two blocks share at most
// one vertex, which is then a cut vertex.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;      // sorted vertex lists, ordered by (min vertex, lex)
  std::vector<int> cut_vertices;             // sorted
  std::vector<std::vector<int>> blocks_of;   // vertex id -> indices into blocks

  bool is_cut_vertex(int v) const;
  const std::vector<int>& containing(int v) const;
};

BlockDecomposition blocks(const SignedGraph& g);

// True iff every block induces a complete graph.
bool is_forest_of_cliques(const SignedGraph& g);

// Block taxonomy of g - s relative to the distinguished set s:
//   interior of C: vertices whose (g - s)-neighborhood stays inside C;
//   special: interior meets N_g(s); path: |V(C)| = 2 = |exterior|;
//   leaf: |exterior| <= 1. A path vertex lies only in path blocks; pure
//   paths are the maximal disjoint chains of path vertices whose inner
//   vertices have exactly their two chain neighbors in g - s.
struct BlockLabels {
  BlockDecomposition decomposition;          // blocks of g - s
  std::vector<std::vector<int>> interior;    // per block, sorted
  std::vector<std::vector<int>> exterior;    // per block, sorted
  std::vector<char> special;
  std::vector<char> path_block;
  std::vector<char> leaf_block;
  std::vector<int> path_vertices;            // sorted
  std::vector<std::vector<int>> pure_paths;  // vertex sequences
};

BlockLabels label_blocks(const SignedGraph& g, std::span<const int> s);

struct Triangle {
  int a = 0, b = 0, c = 0;
};

// Smallest triangle within the given vertex set whose sign product is
// positive, or nothing.
std::optional<Triangle> positive_triangle(const SignedGraph& g, std::span<const int> within);

// A set W subset of the given vertices such that switching W leaves no
// positive edge inside them. Requires g restricted to the set to be chordal
// and free of positive triangles; a found positive triangle is reported in
// the error.
std::vector<int> switch_to_all_negative(const SignedGraph& g, std::span<const int> within);

}  // namespace sgmc::decomp
