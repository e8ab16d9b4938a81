/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace sgmc_cli {

namespace {

// Raw engine bits; std::uniform_real_distribution is not pinned across
// standard libraries.
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

char draw_sign(std::mt19937_64& rng, double neg) { return u01(rng) < neg ? '-' : '+'; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected(int n, const std::vector<IoEdge>& edges) {
  if (n <= 1) return true;
  UnionFind uf(n);
  for (const auto& e : edges) uf.unite(e.u, e.v);
  int root = uf.find(1);
  for (int v = 2; v <= n; ++v)
    if (uf.find(v) != root) return false;
  return true;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

Generated gen_random(int n, double p, double neg, std::uint64_t seed, std::optional<int> k) {
  if (n < 0) throw ParseError(0, "gen random: n must be nonnegative");
  Generated out;
  int attempts = 0;
  while (true) {
    ++attempts;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempts) - 1);
    std::vector<IoEdge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (u01(rng) < p) edges.push_back({u, v, draw_sign(rng, neg)});
    if (connected(n, edges)) {
      out.instance.n = n;
      out.instance.edges = std::move(edges);
      out.instance.k = k;
      break;
    }
    if (attempts >= 100000)
      throw ParseError(0, "gen random: no connected sample after 100000 attempts");
  }
  std::ostringstream c;
  c << "generator random n=" << n << " p=" << format_double(p) << " neg=" << format_double(neg)
    << " seed=" << seed << " attempts=" << attempts;
  out.comments.push_back(c.str());
  return out;
}

Generated gen_foc(int cliques, int max_size, int s_count, int k, double neg, std::uint64_t seed) {
  if (cliques < 1) throw ParseError(0, "gen foc: need at least one clique");
  if (max_size < 2) throw ParseError(0, "gen foc: clique size must be at least 2");
  if (s_count < 0) throw ParseError(0, "gen foc: s-count must be nonnegative");
  if (s_count == 0 && cliques < 1) throw ParseError(0, "gen foc: nothing to plant");

  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> used;
  std::vector<IoEdge> edges;
  auto add_edge = [&](int u, int v, char sign) {
    auto key = std::minmax(u, v);
    if (used.insert(key).second) edges.push_back({key.first, key.second, sign});
  };

  int next_id = 1;
  std::vector<int> s_vertices;
  for (int i = 0; i < s_count; ++i) s_vertices.push_back(next_id++);
  for (int i = 1; i < s_count; ++i)
    add_edge(s_vertices[i - 1], s_vertices[i], draw_sign(rng, neg));

  int previous_tail = 0;
  for (int ci = 0; ci < cliques; ++ci) {
    int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - 1));
    std::vector<int> members;
    if (s_count == 0 && previous_tail != 0) {
      members.push_back(previous_tail);  // chain cliques at a shared cut vertex
      --size;
    }
    for (int i = 0; i < size; ++i) members.push_back(next_id++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        add_edge(members[i], members[j], draw_sign(rng, neg));
    previous_tail = members.back();

    if (s_count > 0) {
      // Anchor edge keeps the instance connected; extra contacts at random.
      int anchor = s_vertices[rng() % s_vertices.size()];
      add_edge(anchor, members.front(), draw_sign(rng, neg));
      for (int v : members)
        if (u01(rng) < 0.15)
          add_edge(s_vertices[rng() % s_vertices.size()], v, draw_sign(rng, neg));
    }
  }

  Generated out;
  out.instance.n = next_id - 1;
  out.instance.edges = std::move(edges);
  out.instance.k = k;
  std::ostringstream c;
  c << "generator foc cliques=" << cliques << " size=" << max_size << " s-count=" << s_count
    << " k=" << k << " neg=" << format_double(neg) << " seed=" << seed << " attempts=1";
  out.comments.push_back(c.str());
  return out;
}

}  // namespace sgmc_cli
