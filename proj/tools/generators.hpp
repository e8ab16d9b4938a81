/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instance_io.hpp"

namespace sgmc_cli {

// Both generators are fully deterministic in their arguments: identical
// seeds give identical instances.

struct Generated {
  Instance instance;
  std::vector<std::string> comments;
};

// Edge probability p, negative-sign probability neg. Retries with advanced
// seeds until the sample is connected; the attempt count lands in a comment.
Generated gen_random(int n, double p, double neg, std::uint64_t seed, std::optional<int> k);

// Plants cliques attached to a distinguished set of s_count vertices (chained
// cliques when s_count is 0); connected by construction. Clique sizes are
// drawn from 2..max_size; every edge is negative with probability neg.
Generated gen_foc(int cliques, int max_size, int s_count, int k, double neg, std::uint64_t seed);

}  // namespace sgmc_cli
