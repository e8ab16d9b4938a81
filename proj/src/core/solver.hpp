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

#include "mcwv.hpp"
#include "signed_graph.hpp"

namespace sgmc::solver {

enum class Route { early_yes_by_rules, full_enumeration };

// Expansion of one side-guess on S: an MCWV instance over g - s whose
// optimum, plus the constant offset (edges inside S consistent with the
// guess), equals the best consistent edge count over all assignments of g
// extending the guess. Requires g - s to carry only negative edges.
struct GuessExpansion {
  mcwv::WeightedInstance instance;
  long long offset = 0;
};
GuessExpansion weights_for_guess(const SignedGraph& g, std::span<const int> s,
                                 const Assignment& guess);

struct SolveResult {
  bool yes = false;
  std::optional<long long> beta;      // present whenever full enumeration ran
  std::optional<Assignment> witness;  // attains beta on the input graph
  Route route = Route::full_enumeration;
  std::size_t marked_size = 0;  // |S|
  std::uint64_t guesses = 0;
};

struct SolveOptions {
  // The decision needs no enumeration after an early yes; exact beta forces
  // a complete reduction run and the full guess loop.
  bool exact_beta = true;
};

// Decides whether g has a balanced subgraph with at least
// (quarter_bound(g) + k) / 4 edges and computes beta(g) exactly on the
// enumeration route. Rejects disconnected inputs.
SolveResult solve(const SignedGraph& g, int k, const SolveOptions& opts = {});

}  // namespace sgmc::solver
