#include <random>

#include "core/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace sgmc;
using test_support::complete_graph;
using test_support::graph_of;

TEST_CASE("oracle beta on small graphs") {
  CHECK(oracle::beta(complete_graph(4, Sign::negative)) == 4);
  CHECK(oracle::beta(complete_graph(4, Sign::positive)) == 6);
  // Triangle (+,+,-): enumerating the four bipartitions gives 2.
  CHECK(oracle::beta(graph_of(3, {{1, 2, '+'}, {1, 3, '+'}, {2, 3, '-'}})) == 2);
  CHECK(oracle::beta(SignedGraph::build(0, {})) == 0);
}

TEST_CASE("oracle beta slow path agrees with naive evaluation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto g = test_support::random_connected(rng, n, 0.5, 0.5);
    long long naive = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Assignment a;
      for (int v = 1; v <= n; ++v) a.assign(v, (mask >> (v - 1)) & 1 ? 2 : 1);
      naive = std::max(naive, consistent_edges(g, a));
    }
    CHECK(oracle::beta(g) == naive);
  }
}

TEST_CASE("oracle rejects graphs above the vertex limit") {
  auto g = complete_graph(5, Sign::negative);
  CHECK_THROWS_WITH_AS(oracle::beta(g, 4), doctest::Contains("limit"), Error);
  CHECK_THROWS_AS(oracle::mcwv_value({g, {}, {}}, 4), Error);
}

TEST_CASE("oracle mcwv examples") {
  mcwv::WeightedInstance single;
  single.graph = SignedGraph::build(1, {});
  single.w1 = {0, 5};
  single.w2 = {0, 3};
  CHECK(oracle::mcwv_value(single) == 5);

  mcwv::WeightedInstance triangle;
  triangle.graph = complete_graph(3, Sign::negative);
  CHECK(oracle::mcwv_value(triangle) == 2);

  mcwv::WeightedInstance weighted = triangle;
  weighted.w1.assign(4, 0);
  weighted.w2.assign(4, 0);
  weighted.w1[1] = 10;
  // Enumerating the eight assignments: vertex 1 on side 1 plus a 1|2 split.
  CHECK(oracle::mcwv_value(weighted) == 12);
}

TEST_CASE("oracle decide examples") {
  auto k4 = complete_graph(4, Sign::negative);
  CHECK(oracle::decide(k4, 1));       // 16 >= 15 + 1
  CHECK(!oracle::decide(k4, 2));      // 16 <  15 + 2
  auto k3 = complete_graph(3, Sign::negative);
  CHECK(oracle::decide(k3, 0));       // 8 >= 8
  CHECK(!oracle::decide(k3, 1));
}

TEST_CASE("lower bound, balanced graphs, switch and dual invariance") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = test_support::random_connected(rng, n, 0.5, 0.6);
    long long beta = oracle::beta(g);
    CHECK(4 * beta >= quarter_bound(g).quarters);
    CHECK(oracle::beta(dual(dual(g))) == beta);
    if (is_balanced(g).balanced) CHECK(beta == g.edge_count());
  }
}

TEST_CASE("decide is monotone non-increasing in k") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = test_support::random_connected(rng, 5, 0.6, 0.5);
    bool previous = true;
    for (int k = 0; k <= 10; ++k) {
      bool yes = oracle::decide(g, k);
      if (!previous) CHECK(!yes);
      previous = yes;
    }
  }
}
