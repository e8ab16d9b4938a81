/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signed_graph.hpp"

namespace sgmc::oneway {

// One application of a one-way reduction rule. One-way means: the reduced
// instance being a yes-instance forces the original to be one too, never the
// other way around. Marked vertices accumulate into the set S the downstream
// stages work against.
struct RuleApplication {
  int rule_id = 0;           // 1..7
  std::vector<int> deleted;  // sorted
  std::vector<int> marked;   // sorted, subset of deleted
  int k_delta = 0;
  std::vector<int> witness;  // rule-specific anchor vertices
};

// First applicable rule in fixed order 1..7 with lexicographic witness
// tie-breaking; nothing only for graphs without edges.
std::optional<RuleApplication> find_rule(const SignedGraph& g);

// Every application of every rule, in the same deterministic order. Test and
// audit support.
std::vector<RuleApplication> enumerate_rules(const SignedGraph& g);

// Replays one application; rejects stale applications whose witness no
// longer matches the graph.
std::pair<SignedGraph, int> apply_rule(const SignedGraph& g, int k, const RuleApplication& app);

struct ReductionOutcome {
  SignedGraph final_graph;
  int final_k = 0;
  std::vector<int> marked_set;  // S, in the original graph's identifiers
  std::vector<RuleApplication> trace;
  bool stopped_early = false;  // k reached <= 0 before the rules ran out
};

// Applies rules exhaustively. Stops early once k drops to <= 0 (a certified
// yes) unless told to run to exhaustion; the rules themselves never consult
// k, so the application sequence is the same either way.
ReductionOutcome reduce(const SignedGraph& g, int k, bool stop_when_k_exhausted = true);

// `rule=<id> deleted=<list> marked=<list> kdelta=<d>`
std::string trace_line(const RuleApplication& app);

}  // namespace sgmc::oneway
