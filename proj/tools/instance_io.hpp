/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgmc_cli {

// Line-based instance format:
//   c <free text>         comment
//   p signed <n> <m>      exactly once, first non-comment line
//   k <integer>           at most once
//   e <u> <v> <+|->       exactly m times
// Opposite-sign duplicate pairs cancel on load; same-sign duplicates and
// self-loops are errors.

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

struct IoEdge {
  int u = 0;
  int v = 0;
  char sign = '+';
  friend bool operator==(const IoEdge&, const IoEdge&) = default;
};

struct Instance {
  int n = 0;
  std::vector<IoEdge> edges;  // after cancellation, u < v, sorted
  std::optional<int> k;
};

Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);  // throws ParseError

std::string serialize_instance(const Instance& inst, std::span<const std::string> comments);

std::uint64_t fnv1a64(std::span<const char> bytes);

}  // namespace sgmc_cli
