/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "solver.hpp"

#include <algorithm>

#include "decomposition.hpp"
#include "oneway.hpp"

namespace sgmc::solver {

GuessExpansion weights_for_guess(const SignedGraph& g, std::span<const int> s,
                                 const Assignment& guess) {
  std::vector<char> in_s(g.max_vertex_id() + 1, 0);
  for (int v : s) {
    if (!g.has_vertex(v)) fail(Errc::invalid_argument, "weights_for_guess: unknown vertex");
    if (guess.side(v) == 0) fail(Errc::invalid_argument, "weights_for_guess: guess not total on S");
    in_s[v] = 1;
  }

  GuessExpansion out;
  std::vector<int> rest;
  for (int v : g.vertices())
    if (!in_s[v]) rest.push_back(v);
  out.instance.graph = induced(g, rest);
  out.instance.w1.assign(g.max_vertex_id() + 1, 0);
  out.instance.w2.assign(g.max_vertex_id() + 1, 0);

  for (int v : rest) {
    for (const auto& nb : g.neighbors(v)) {
      if (!in_s[nb.v]) {
        if (nb.sign == Sign::positive)
          fail(Errc::invalid_argument, "weights_for_guess: positive edge outside S");
        continue;
      }
      // Placing v on side i earns the edges to S it makes consistent.
      bool to_side1 = guess.side(nb.v) == 1;
      bool positive = nb.sign == Sign::positive;
      if (to_side1 == positive)
        ++out.instance.w1[v];
      else
        ++out.instance.w2[v];
    }
  }

  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      auto sign = g.edge_sign(s[i], s[j]);
      if (!sign) continue;
      bool same = guess.side(s[i]) == guess.side(s[j]);
      if (same == (*sign == Sign::positive)) ++out.offset;
    }
  return out;
}

namespace {

// Any marked set whose removal leaves a positive-triangle-free forest of
// cliques supports the guess enumeration; the rules can over-mark badly on
// tree-like graphs (every pair of path vertices), so drop members greedily
// before paying 2^|S|.
std::vector<int> minimize_marked(const SignedGraph& g, std::vector<int> s) {
  auto usable = [&g](const std::vector<int>& candidate) {
    SignedGraph h = delete_vertices(g, candidate);
    return decomp::is_forest_of_cliques(h) &&
           !decomp::positive_triangle(h, h.vertices()).has_value();
  };
  for (std::size_t i = 0; i < s.size();) {
    std::vector<int> candidate = s;
    candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
    if (usable(candidate))
      s = std::move(candidate);
    else
      ++i;
  }
  return s;
}

struct Enumeration {
  long long beta = -1;
  Assignment best;
  std::uint64_t guesses = 0;
};

// 2^(|S|-1) side-guesses on S (first vertex pinned to side 1), each expanded
// to an MCWV instance on the all-negative remainder. Ties between optima go
// to the lexicographically smallest full assignment.
Enumeration enumerate_guesses(const SignedGraph& gw, std::span<const int> s) {
  if (s.size() >= 63)
    fail(Errc::limit_exceeded,
         "guess stage infeasible: " + std::to_string(s.size()) + " marked vertices");
  Enumeration res;
  std::uint64_t count = s.empty() ? 1 : (1ull << (s.size() - 1));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Assignment guess;
    if (!s.empty()) {
      guess.assign(s[0], 1);
      for (std::size_t i = 1; i < s.size(); ++i)
        guess.assign(s[i], (mask >> (i - 1)) & 1 ? 2 : 1);
    }
    GuessExpansion expansion = weights_for_guess(gw, s, guess);
    mcwv::Solution sol = mcwv::solve(expansion.instance);
    long long total = sol.value + expansion.offset;

    Assignment full = sol.assignment;
    for (int v : s) full.assign(v, guess.side(v));
    if (total > res.beta ||
        (total == res.beta && lex_less(full, res.best, gw.vertices()))) {
      res.beta = total;
      res.best = full;
    }
    ++res.guesses;
  }
  return res;
}

}  // namespace

SolveResult solve(const SignedGraph& g, int k, const SolveOptions& opts) {
  if (!is_connected(g)) fail(Errc::invalid_argument, "solve requires a connected graph");

  SolveResult res;
  auto reduction = oneway::reduce(g, k, true);
  std::vector<int> s;
  if (reduction.final_k <= 0) {
    res.route = Route::early_yes_by_rules;
    res.yes = true;
    res.marked_size = reduction.marked_set.size();
    if (!opts.exact_beta) return res;
    // Exact beta after an early yes: rerun the rules to exhaustion for the
    // complete marked set, then enumerate as usual.
    s = oneway::reduce(g, k, false).marked_set;
  } else {
    res.route = Route::full_enumeration;
    s = std::move(reduction.marked_set);
  }
  s = minimize_marked(g, std::move(s));
  res.marked_size = s.size();

  std::vector<int> rest;
  {
    std::vector<char> in_s(g.max_vertex_id() + 1, 0);
    for (int v : s) in_s[v] = 1;
    for (int v : g.vertices())
      if (!in_s[v]) rest.push_back(v);
  }
  std::vector<int> w = decomp::switch_to_all_negative(g, rest);
  SignedGraph gw = switched(g, w);

  Enumeration e = enumerate_guesses(gw, s);
  res.guesses = e.guesses;
  res.beta = e.beta;
  // Map the witness back through the switch.
  for (int v : w) e.best.flip(v);
  res.witness = std::move(e.best);

  long long quarters = quarter_bound(g).quarters;
  if (4 * e.beta < quarters)
    fail(Errc::internal, "enumeration fell below the lower bound");
  bool enough = 4 * e.beta >= quarters + k;
  if (res.route == Route::full_enumeration)
    res.yes = enough;
  else if (!enough)
    fail(Errc::internal, "early yes contradicted by exact enumeration");
  return res;
}

}  // namespace sgmc::solver
