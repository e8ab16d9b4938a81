#include <random>

#include "core/decomposition.hpp"
#include "core/kernelizer.hpp"
#include "core/oneway.hpp"
#include "core/oracle.hpp"
#include "core/solver.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace sgmc;
using test_support::complete_graph;
using test_support::graph_of;

namespace {

// Oracle equivalence of a single two-way application over a k range.
void check_equivalent(const SignedGraph& g, const kernel::TwoWayOutcome& step) {
  for (int k = 0; k <= 8; ++k) {
    int k2 = k - step.app.k_delta;
    CHECK(oracle::decide(g, k) == oracle::decide(step.graph, k2));
  }
}

}  // namespace

TEST_CASE("size bound values") {
  CHECK(kernel::size_bound(1) == 378);
  CHECK(kernel::size_bound(2) == 3204);
  CHECK(kernel::size_bound(0) == 0);
}

TEST_CASE("rule 8 deletes two of a dominant interior class") {
  // K5 all negative, one vertex positively tied to s=6; the other four form
  // an S-free class of size 4 > 5/2.
  std::vector<RawEdge> edges;
  for (int u = 1; u <= 5; ++u)
    for (int v = u + 1; v <= 5; ++v) edges.push_back({u, v, Sign::negative});
  edges.push_back({1, 6, Sign::positive});
  auto g = SignedGraph::build(6, edges);
  std::vector<int> s{6};

  auto step = kernel::rule8(g, 3, s, std::array{1, 2, 3, 4, 5});
  REQUIRE(step.has_value());
  CHECK(step->app.deleted == std::vector<int>{2, 3});
  CHECK(step->k == 3);
  check_equivalent(g, *step);
}

TEST_CASE("rule 8 needs a strict majority") {
  // K4 block whose S-free interior class has exactly two members: 2 > 2 fails.
  auto g = graph_of(6, {{1, 2, '-'}, {1, 3, '-'}, {1, 4, '-'}, {2, 3, '-'}, {2, 4, '-'},
                        {3, 4, '-'}, {3, 5, '-'}, {4, 6, '-'}});
  CHECK(!kernel::rule8(g, 2, std::vector<int>{}, std::array{1, 2, 3, 4}).has_value());

  // K3 block, interior class of size 2 sharing the contact s: 2 > (3+1)/2 fails.
  auto h = graph_of(4, {{1, 2, '-'}, {1, 3, '-'}, {2, 3, '-'},
                        {1, 4, '+'}, {2, 4, '+'}, {3, 4, '-'}});
  CHECK(!kernel::rule8(h, 2, std::array{4}, std::array{1, 2, 3}).has_value());
}

TEST_CASE("rule 9 on a half-free even block") {
  // K4 all negative with vertices 3,4 exterior (pendants 5,6) and 1,2 the
  // S-free interior half; s=7 keeps the graph connected via vertex 5.
  auto g = graph_of(7, {{1, 2, '-'}, {1, 3, '-'}, {1, 4, '-'}, {2, 3, '-'}, {2, 4, '-'},
                        {3, 4, '-'}, {3, 5, '-'}, {4, 6, '-'}, {5, 7, '-'}});
  std::vector<int> s{7};
  CHECK(!kernel::rule8(g, 2, s, std::array{1, 2, 3, 4}).has_value());
  auto step = kernel::rule9(g, 2, s, std::array{1, 2, 3, 4});
  REQUIRE(step.has_value());
  CHECK(step->app.deleted == std::vector<int>{1});
  CHECK(step->k == 1);
  check_equivalent(g, *step);
}

TEST_CASE("rule 8 preempts rule 9 when the free interior exceeds half") {
  // K4 with three S-free interior vertices: 3 > 2, so rule 8 fires first.
  auto g = graph_of(6, {{1, 2, '-'}, {1, 3, '-'}, {1, 4, '-'}, {2, 3, '-'}, {2, 4, '-'},
                        {3, 4, '-'}, {4, 5, '-'}, {5, 6, '-'}});
  std::vector<int> s{6};
  auto first = kernel::find_two_way(g, 3, s);
  REQUIRE(first.has_value());
  CHECK(first->app.rule_id == 8);
}

TEST_CASE("rule 9 stays silent on odd blocks") {
  auto g = complete_graph(3, Sign::negative);
  CHECK(!kernel::rule9(g, 2, std::vector<int>{}, std::array{1, 2, 3}).has_value());
}

TEST_CASE("rule 10 bridge case contracts the triangle") {
  // 1 - 2, triangle {2,3,4} with interior 4, 3 - 5; edge {2,3} bridges g - 4.
  auto g = graph_of(5, {{1, 2, '-'}, {2, 3, '-'}, {2, 4, '-'}, {3, 4, '-'}, {3, 5, '-'}});
  auto step = kernel::rule10(g, 2, std::vector<int>{}, std::array{2, 3, 4});
  REQUIRE(step.has_value());
  CHECK(step->app.k_delta == 0);
  CHECK(step->app.added == 6);
  CHECK(step->graph.vertices() == std::vector<int>{1, 5, 6});
  CHECK(step->graph.edge_sign(1, 6) == Sign::negative);
  CHECK(step->graph.edge_sign(5, 6) == Sign::negative);
  CHECK(oracle::beta(g) - oracle::beta(step->graph) == 2);
  check_equivalent(g, *step);
}

TEST_CASE("rule 10 non-bridge case drops the degree-two vertex and the edge") {
  // Triangle {1,2,4} in g - s with u=4; s=3 closes a second 1..2 path.
  auto g = graph_of(4, {{1, 2, '-'}, {1, 4, '-'}, {2, 4, '-'}, {1, 3, '+'}, {2, 3, '+'}});
  std::vector<int> s{3};
  auto step = kernel::rule10(g, 2, s, std::array{1, 2, 4});
  REQUIRE(step.has_value());
  CHECK(step->app.k_delta == 1);
  CHECK(step->app.added == 0);
  CHECK(step->app.deleted == std::vector<int>{4});
  CHECK(!step->graph.has_edge(1, 2));
  CHECK(step->graph.has_vertex(1));
  check_equivalent(g, *step);
}

TEST_CASE("rule 10 requires an inner vertex seeing only the triangle") {
  // Every triangle vertex has a third neighbor (one in S, two elsewhere in
  // g - s), so no vertex qualifies as u.
  auto g = graph_of(6, {{1, 2, '-'}, {1, 4, '-'}, {2, 4, '-'}, {4, 3, '+'},
                        {1, 5, '-'}, {2, 6, '-'}});
  std::vector<int> s{3};
  CHECK(!kernel::rule10(g, 2, s, std::array{1, 2, 4}).has_value());
}

TEST_CASE("rule 11 resolves single-contact components") {
  // T = {2}, negative edge to s=1: slack 4*1 - 3 = 1.
  auto neg = graph_of(2, {{1, 2, '-'}});
  auto step = kernel::rule11(neg, 3, std::array{1}, std::array{2});
  REQUIRE(step.has_value());
  CHECK(step->app.k_delta == 1);
  CHECK(step->k == 2);
  CHECK(step->graph.vertices() == std::vector<int>{1});

  // Positive contact is symmetric under switching.
  auto pos = graph_of(2, {{1, 2, '+'}});
  auto step2 = kernel::rule11(pos, 3, std::array{1}, std::array{2});
  REQUIRE(step2.has_value());
  CHECK(step2->app.k_delta == 1);

  // T = negative K2 with one vertex tied to s: slack = 4*beta(union) - ptq.
  auto chain = graph_of(3, {{1, 2, '-'}, {2, 3, '-'}});
  auto step3 = kernel::rule11(chain, 5, std::array{1}, std::array{2, 3});
  REQUIRE(step3.has_value());
  auto union_graph = induced(chain, std::array{1, 2, 3});
  long long expected = 4 * oracle::beta(union_graph) - quarter_bound(union_graph).quarters;
  CHECK(step3->app.k_delta == expected);
  CHECK(expected == 2);
  check_equivalent(chain, *step3);

  // Two contacts in S: silent.
  auto two = graph_of(3, {{1, 3, '-'}, {2, 3, '-'}});
  CHECK(!kernel::rule11(two, 3, std::array{1, 2}, std::array{3}).has_value());
}

TEST_CASE("thresholds stay silent with an empty S") {
  auto g = complete_graph(3, Sign::negative);
  CHECK(!kernel::thresholds(g, 1, {}).has_value());
}

TEST_CASE("boundLeafs threshold value for |S|=1, k=1 is two contacts") {
  // The contact sum threshold |S|(2|S|-3+2k)+1 instantiates to 2: two leaf
  // blocks whose interiors touch s reach it, one does not.
  auto two = graph_of(5, {{1, 2, '-'}, {3, 4, '-'}, {1, 5, '-'}, {3, 5, '-'},
                          {2, 5, '-'}, {4, 5, '-'}});
  auto fires = kernel::thresholds(two, 1, std::array{5});
  REQUIRE(fires.has_value());
  CHECK(*fires == kernel::YesReason::bound_leafs);

  auto one = graph_of(3, {{1, 2, '-'}, {1, 3, '-'}, {2, 3, '-'}});
  CHECK(!kernel::thresholds(one, 1, std::array{3}).has_value());

  // The threshold presumes a fully reduced instance; the pipeline reduces
  // first (rule 11 absorbs both components here) and stays correct even
  // though (two, 1) is a no-instance.
  CHECK(!oracle::decide(two, 1));
  auto out = kernel::kernelize(two, 1);
  if (out.resolved_yes) {
    CHECK(false);
  } else {
    CHECK(solver::solve(out.kernel, out.kernel_k).yes == false);
  }
}

TEST_CASE("pathlength threshold fires on a planted pure path") {
  // g - s: 1-2-3-4-5-6-7 with s=8 attached at the second and sixth vertex;
  // pure path (3,4,5) has length |S|+k+1 = 3 for k=1.
  auto g = graph_of(8, {{1, 2, '-'}, {2, 3, '-'}, {3, 4, '-'}, {4, 5, '-'}, {5, 6, '-'},
                        {6, 7, '-'}, {2, 8, '-'}, {6, 8, '-'}});
  auto labels = decomp::label_blocks(g, std::array{8});
  REQUIRE(labels.pure_paths.size() == 1);
  CHECK(labels.pure_paths[0] == std::vector<int>{3, 4, 5});
  auto reason = kernel::thresholds(g, 1, std::array{8});
  REQUIRE(reason.has_value());
  CHECK(*reason == kernel::YesReason::path_length);
  CHECK(oracle::decide(g, 1));
}

TEST_CASE("kernelize resolves yes when the rules exhaust k") {
  auto k3 = complete_graph(3, Sign::positive);
  auto out = kernel::kernelize(k3, 3);
  CHECK(out.resolved_yes);
  CHECK(out.reason == kernel::YesReason::k_nonpositive);
}

TEST_CASE("kernelize on the smallest instance") {
  auto k2 = graph_of(2, {{1, 2, '-'}});
  // k = 0 is a yes by the lower bound itself (4*beta = 4 >= 3 = ptq).
  auto out = kernel::kernelize(k2, 0);
  CHECK(out.resolved_yes);
  CHECK(out.reason == kernel::YesReason::k_nonpositive);
  CHECK(oracle::decide(k2, 0));
  // k = 1 is also a yes and the two-way rules certify it.
  auto out1 = kernel::kernelize(k2, 1);
  CHECK(out1.resolved_yes);
  // k = 2 is a no; the kernel keeps the answer.
  auto out2 = kernel::kernelize(k2, 2);
  REQUIRE(!out2.resolved_yes);
  CHECK(solver::solve(out2.kernel, out2.kernel_k).yes == solver::solve(k2, 2).yes);
}

TEST_CASE("kernelize the planted forest of big cliques") {
  // Three all-negative cliques of size 30 attached to two S vertices.
  std::vector<RawEdge> edges;
  int next = 3;
  for (int c = 0; c < 3; ++c) {
    int first = next;
    for (int i = 0; i < 30; ++i, ++next)
      for (int j = first; j < next; ++j) edges.push_back({j, next, Sign::negative});
    edges.push_back({1, first, Sign::negative});
    edges.push_back({2, first + 1, Sign::negative});
  }
  edges.push_back({1, 2, Sign::negative});
  auto g = SignedGraph::build(next - 1, edges);
  REQUIRE(g.vertex_count() == 92);
  REQUIRE(is_connected(g));

  auto out = kernel::kernelize(g, 2);
  bool original = solver::solve(g, 2, {.exact_beta = false}).yes;
  if (out.resolved_yes) {
    CHECK(original);
  } else {
    CHECK(out.kernel.vertex_count() <= kernel::size_bound(2));
    CHECK(solver::solve(out.kernel, out.kernel_k, {.exact_beta = false}).yes == original);
  }
}

TEST_CASE("single two-way applications are oracle-equivalent, randomized") {
  std::mt19937_64 rng(89);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto g = test_support::random_connected(rng, n, 0.6, 0.7);
    auto s = oneway::reduce(g, 1, false).marked_set;
    std::vector<int> rest;
    for (int v : g.vertices())
      if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
    auto gw = switched(g, decomp::switch_to_all_negative(g, rest));
    for (const auto& step : kernel::enumerate_two_way(gw, 4, s)) {
      check_equivalent(gw, step);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("kernelize matches the solver on random small instances") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = test_support::random_connected(rng, n, 0.5, 0.8);
    int k = 1 + static_cast<int>(rng() % 6);
    auto out = kernel::kernelize(g, k);
    bool expected = oracle::decide(g, k);
    if (out.resolved_yes) {
      CHECK(expected);
    } else {
      CHECK(out.kernel.vertex_count() <= kernel::size_bound(k));
      CHECK(out.kernel_k <= k);
      CHECK(solver::solve(out.kernel, out.kernel_k).yes == expected);
    }
  }
}

TEST_CASE("emitted kernels satisfy the leaf and single-contact structure") {
  std::mt19937_64 rng(103);
  int kernels_with_marks = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    auto g = test_support::random_connected(rng, n, 0.5, 0.85);
    int k = 1 + static_cast<int>(rng() % 5);
    auto out = kernel::kernelize(g, k);
    if (out.resolved_yes || out.marked_set.empty()) continue;
    ++kernels_with_marks;
    auto labels = decomp::label_blocks(out.kernel, out.marked_set);
    std::vector<char> in_s(out.kernel.max_vertex_id() + 1, 0);
    for (int v : out.marked_set) in_s[v] = 1;
    // Every leaf block's interior touches S.
    for (std::size_t bi = 0; bi < labels.decomposition.blocks.size(); ++bi) {
      if (!labels.leaf_block[bi]) continue;
      bool contact = false;
      for (int v : labels.interior[bi])
        for (const auto& nb : out.kernel.neighbors(v))
          if (in_s[nb.v]) contact = true;
      CHECK(contact);
    }
    // A component with a single S-touching vertex is a single vertex.
    auto h = delete_vertices(out.kernel, out.marked_set);
    for (const auto& comp : components(h)) {
      int touching = 0;
      for (int v : comp)
        for (const auto& nb : out.kernel.neighbors(v))
          if (in_s[nb.v]) {
            ++touching;
            break;
          }
      if (touching == 1) CHECK(comp.size() == 1);
    }
  }
  CHECK(kernels_with_marks > 0);
}

TEST_CASE("kernel trace serialization") {
  kernel::TwoWayApplication app{10, {2, 3, 4}, 6, 0};
  CHECK(kernel::trace_line(app) == "rule=10 deleted=2,3,4 added=6 kdelta=0");
  kernel::TwoWayApplication plain{9, {1}, 0, 1};
  CHECK(kernel::trace_line(plain) == "rule=9 deleted=1 added=- kdelta=1");
}
