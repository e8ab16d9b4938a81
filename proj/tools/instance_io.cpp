/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace sgmc_cli {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool header_seen = false;
  bool k_seen = false;
  long long expected_edges = 0;
  long long edge_lines = 0;
  // (pair, sign) multiplicities; two of the same sign are an error, a +/-
  // pair cancels.
  std::map<std::pair<int, int>, std::pair<int, int>> counts;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (header_seen) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "signed")
        throw ParseError(line_no, "header must be 'p signed <n> <m>'");
      inst.n = parse_int(toks[2], line_no);
      expected_edges = parse_int(toks[3], line_no);
      if (inst.n < 0 || expected_edges < 0) throw ParseError(line_no, "negative header counts");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError(line_no, "header must precede '" + toks[0] + "' lines");
    if (toks[0] == "k") {
      if (k_seen) throw ParseError(line_no, "duplicate k line");
      if (toks.size() != 2) throw ParseError(line_no, "k line must be 'k <integer>'");
      inst.k = parse_int(toks[1], line_no);
      k_seen = true;
      continue;
    }
    if (toks[0] == "e") {
      if (toks.size() != 4) throw ParseError(line_no, "edge line must be 'e <u> <v> <+|->'");
      int u = parse_int(toks[1], line_no);
      int v = parse_int(toks[2], line_no);
      if (toks[3] != "+" && toks[3] != "-")
        throw ParseError(line_no, "edge sign must be '+' or '-'");
      if (u < 1 || u > inst.n || v < 1 || v > inst.n)
        throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "self-loop rejected");
      ++edge_lines;
      if (edge_lines > expected_edges) throw ParseError(line_no, "more edge lines than declared");
      auto key = std::minmax(u, v);
      auto& c = counts[{key.first, key.second}];
      int& slot = (toks[3] == "+") ? c.first : c.second;
      if (++slot > 1) throw ParseError(line_no, "parallel edges of the same sign rejected");
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
  }
  if (!header_seen) throw ParseError(line_no ? line_no : 1, "missing 'p signed' header");
  if (edge_lines != expected_edges)
    throw ParseError(line_no ? line_no : 1,
                     "expected " + std::to_string(expected_edges) + " edge lines, found " +
                         std::to_string(edge_lines));

  for (const auto& [key, c] : counts) {
    if (c.first == 1 && c.second == 1) continue;  // cancelled pair
    inst.edges.push_back({key.first, key.second, c.first == 1 ? '+' : '-'});
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst, std::span<const std::string> comments) {
  std::vector<IoEdge> edges = inst.edges;
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const IoEdge& a, const IoEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  std::ostringstream os;
  for (const auto& c : comments) os << "c " << c << "\n";
  os << "p signed " << inst.n << " " << edges.size() << "\n";
  if (inst.k) os << "k " << *inst.k << "\n";
  for (const auto& e : edges) os << "e " << e.u << " " << e.v << " " << e.sign << "\n";
  return os.str();
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace sgmc_cli
