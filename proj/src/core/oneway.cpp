/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "oneway.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "decomposition.hpp"

namespace sgmc::oneway {

namespace {

bool connected_without(const SignedGraph& g, std::span<const int> drop) {
  return is_connected(delete_vertices(g, drop));
}

std::vector<std::vector<int>> components_without(const SignedGraph& g, std::span<const int> drop) {
  return components(delete_vertices(g, drop));
}

bool is_clique(const SignedGraph& g, std::span<const int> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!g.has_edge(xs[i], xs[j])) return false;
  return true;
}

// The component role "C" in the rule statements: a clique without a positive
// triangle.
bool qualifying_component(const SignedGraph& g, std::span<const int> comp) {
  return is_clique(g, comp) && !decomp::positive_triangle(g, comp).has_value();
}

bool triangle_positive(const SignedGraph& g, int a, int b, int c) {
  auto ab = g.edge_sign(a, b), ac = g.edge_sign(a, c), bc = g.edge_sign(b, c);
  if (!ab || !ac || !bc) return false;
  int negatives = (*ab == Sign::negative) + (*ac == Sign::negative) + (*bc == Sign::negative);
  return negatives % 2 == 0;
}

std::vector<int> sorted_union(std::vector<int> a, std::span<const int> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

using Sink = std::vector<RuleApplication>;

// Rule 1: a positive triangle whose removal keeps the graph connected.
bool scan_rule1(const SignedGraph& g, bool first_only, Sink& out) {
  for (int a : g.vertices()) {
    for (const auto& nb : g.neighbors(a)) {
      int b = nb.v;
      if (b <= a) continue;
      for (const auto& nc : g.neighbors(a)) {
        int c = nc.v;
        if (c <= b || !g.has_edge(b, c)) continue;
        if (!triangle_positive(g, a, b, c)) continue;
        if (!connected_without(g, std::array{a, b, c})) continue;
        out.push_back({1, {a, b, c}, {a, b, c}, 3, {a, b, c}});
        if (first_only) return true;
      }
    }
  }
  return !out.empty();
}

// Rule 2: a positive triangle splitting the graph into a qualifying clique
// component and one other component; both the triangle and the clique go.
bool scan_rule2(const SignedGraph& g, bool first_only, Sink& out) {
  for (int a : g.vertices()) {
    for (const auto& nb : g.neighbors(a)) {
      int b = nb.v;
      if (b <= a) continue;
      for (const auto& nc : g.neighbors(a)) {
        int c = nc.v;
        if (c <= b || !g.has_edge(b, c)) continue;
        if (!triangle_positive(g, a, b, c)) continue;
        auto comps = components_without(g, std::array{a, b, c});
        if (comps.size() != 2) continue;
        for (const auto& comp : comps) {
          if (!qualifying_component(g, comp)) continue;
          out.push_back({2, sorted_union({a, b, c}, comp), {a, b, c}, 2, {a, b, c}});
          if (first_only) return true;
        }
      }
    }
  }
  return !out.empty();
}

// Rules 3 and 4 share the shape: a qualifying clique component C of g - v
// and a pair a, b in C whose removal keeps the graph connected. Rule 3 wants
// an edge av but no edge bv; rule 4 wants vabv to be a positive triangle.
bool scan_rule34(const SignedGraph& g, int rule_id, bool first_only, Sink& out) {
  for (int v : g.vertices()) {
    if (g.vertex_count() < 2) break;
    for (const auto& comp : components_without(g, std::array{v})) {
      if (!qualifying_component(g, comp)) continue;
      if (rule_id == 3) {
        for (int a : comp) {
          if (!g.has_edge(a, v)) continue;
          for (int b : comp) {
            if (b == a || g.has_edge(b, v)) continue;
            if (!connected_without(g, std::array{a, b})) continue;
            std::vector<int> pair{std::min(a, b), std::max(a, b)};
            out.push_back({3, pair, pair, 2, {v, a, b}});
            if (first_only) return true;
          }
        }
      } else {
        for (int a : comp) {
          if (!g.has_edge(a, v)) continue;
          for (int b : comp) {
            if (b <= a || !g.has_edge(b, v) || !g.has_edge(a, b)) continue;
            if (!triangle_positive(g, v, a, b)) continue;
            if (!connected_without(g, std::array{a, b})) continue;
            out.push_back({4, {a, b}, {a, b}, 4, {v, a, b}});
            if (first_only) return true;
          }
        }
      }
    }
  }
  return !out.empty();
}

// Rule 5: a component C of g - v forming, together with v, a clique without
// a positive triangle; C is deleted without marking.
bool scan_rule5(const SignedGraph& g, bool first_only, Sink& out) {
  for (int v : g.vertices()) {
    if (g.vertex_count() < 2) break;
    for (const auto& comp : components_without(g, std::array{v})) {
      std::vector<int> with_v = sorted_union({v}, comp);
      if (!qualifying_component(g, with_v)) continue;
      out.push_back({5, comp, {}, 0, {v}});
      if (first_only) return true;
    }
  }
  return !out.empty();
}

// Rule 6: an induced two-edge path abc whose removal keeps the graph
// connected.
bool scan_rule6(const SignedGraph& g, bool first_only, Sink& out) {
  for (int b : g.vertices()) {
    const auto& nbs = g.neighbors(b);
    for (std::size_t i = 0; i < nbs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbs.size(); ++j) {
        int a = nbs[i].v, c = nbs[j].v;
        if (g.has_edge(a, c)) continue;
        if (!connected_without(g, std::array{a, b, c})) continue;
        std::vector<int> del{a, b, c};
        std::sort(del.begin(), del.end());
        out.push_back({6, del, del, 1, {a, b, c}});
        if (first_only) return true;
      }
    }
  }
  return !out.empty();
}

// Rule 7: nonadjacent v, b splitting the graph into exactly two components,
// one of which forms qualifying cliques with both v and b.
bool scan_rule7(const SignedGraph& g, bool first_only, Sink& out) {
  for (int v : g.vertices()) {
    for (int b : g.vertices()) {
      if (b <= v || g.has_edge(v, b)) continue;
      auto comps = components_without(g, std::array{v, b});
      if (comps.size() != 2) continue;
      for (const auto& comp : comps) {
        if (!qualifying_component(g, sorted_union({v}, comp))) continue;
        if (!qualifying_component(g, sorted_union({b}, comp))) continue;
        out.push_back({7, sorted_union({v, b}, comp), {v, b}, 1, {v, b}});
        if (first_only) return true;
      }
    }
  }
  return !out.empty();
}

bool scan(const SignedGraph& g, int rule_id, bool first_only, Sink& out) {
  switch (rule_id) {
    case 1: return scan_rule1(g, first_only, out);
    case 2: return scan_rule2(g, first_only, out);
    case 3: return scan_rule34(g, 3, first_only, out);
    case 4: return scan_rule34(g, 4, first_only, out);
    case 5: return scan_rule5(g, first_only, out);
    case 6: return scan_rule6(g, first_only, out);
    case 7: return scan_rule7(g, first_only, out);
    default: fail(Errc::invalid_argument, "unknown rule id " + std::to_string(rule_id));
  }
}

[[noreturn]] void stale(const RuleApplication& app) {
  fail(Errc::precondition_failed, "stale rule application: " + trace_line(app));
}

void validate(const SignedGraph& g, const RuleApplication& app) {
  std::size_t expect_witness = (app.rule_id == 5) ? 1u : (app.rule_id == 7 ? 2u : 3u);
  if (app.witness.size() != expect_witness) stale(app);
  for (int v : app.deleted)
    if (!g.has_vertex(v)) stale(app);
  for (int v : app.witness)
    if (!g.has_vertex(v)) stale(app);

  auto deleted_is = [&](std::vector<int> expect) {
    std::sort(expect.begin(), expect.end());
    return app.deleted == expect;
  };
  auto component_of = [&](std::span<const int> drop, int member) -> std::vector<int> {
    for (auto& comp : components_without(g, drop))
      if (std::binary_search(comp.begin(), comp.end(), member)) return comp;
    return {};
  };

  switch (app.rule_id) {
    case 1: {
      int a = app.witness[0], b = app.witness[1], c = app.witness[2];
      if (!triangle_positive(g, a, b, c) || !deleted_is({a, b, c}) ||
          !connected_without(g, app.deleted))
        stale(app);
      return;
    }
    case 2: {
      int a = app.witness[0], b = app.witness[1], c = app.witness[2];
      if (!triangle_positive(g, a, b, c)) stale(app);
      auto comps = components_without(g, std::array{a, b, c});
      if (comps.size() != 2) stale(app);
      for (const auto& comp : comps)
        if (deleted_is(sorted_union({a, b, c}, comp)) && qualifying_component(g, comp)) return;
      stale(app);
      return;
    }
    case 3:
    case 4: {
      int v = app.witness[0], a = app.witness[1], b = app.witness[2];
      if (!deleted_is({a, b})) stale(app);
      auto comp = component_of(std::array{v}, a);
      if (comp.empty() || !std::binary_search(comp.begin(), comp.end(), b) ||
          !qualifying_component(g, comp))
        stale(app);
      if (app.rule_id == 3 && (!g.has_edge(a, v) || g.has_edge(b, v))) stale(app);
      if (app.rule_id == 4 && !triangle_positive(g, v, a, b)) stale(app);
      if (!connected_without(g, std::array{a, b})) stale(app);
      return;
    }
    case 5: {
      int v = app.witness[0];
      auto comp = component_of(std::array{v}, app.deleted.empty() ? 0 : app.deleted[0]);
      if (app.deleted.empty() || comp != app.deleted ||
          !qualifying_component(g, sorted_union({v}, comp)))
        stale(app);
      return;
    }
    case 6: {
      int a = app.witness[0], b = app.witness[1], c = app.witness[2];
      if (!g.has_edge(a, b) || !g.has_edge(b, c) || g.has_edge(a, c) ||
          !deleted_is({a, b, c}) || !connected_without(g, app.deleted))
        stale(app);
      return;
    }
    case 7: {
      int v = app.witness[0], b = app.witness[1];
      if (g.has_edge(v, b)) stale(app);
      auto comps = components_without(g, std::array{v, b});
      if (comps.size() != 2) stale(app);
      for (const auto& comp : comps)
        if (deleted_is(sorted_union({v, b}, comp)) &&
            qualifying_component(g, sorted_union({v}, comp)) &&
            qualifying_component(g, sorted_union({b}, comp)))
          return;
      stale(app);
      return;
    }
    default:
      stale(app);
  }
}

}  // namespace

std::optional<RuleApplication> find_rule(const SignedGraph& g) {
  Sink out;
  for (int rule = 1; rule <= 7; ++rule)
    if (scan(g, rule, true, out)) return out.front();
  return std::nullopt;
}

std::vector<RuleApplication> enumerate_rules(const SignedGraph& g) {
  Sink out;
  for (int rule = 1; rule <= 7; ++rule) scan(g, rule, false, out);
  return out;
}

std::pair<SignedGraph, int> apply_rule(const SignedGraph& g, int k, const RuleApplication& app) {
  validate(g, app);
  SignedGraph next = delete_vertices(g, app.deleted);
  if (!is_connected(next))
    fail(Errc::internal, "rule application disconnected the graph: " + trace_line(app));
  return {std::move(next), k - app.k_delta};
}

ReductionOutcome reduce(const SignedGraph& g, int k, bool stop_when_k_exhausted) {
  if (!is_connected(g)) fail(Errc::invalid_argument, "reduce requires a connected graph");
  ReductionOutcome out;
  out.final_graph = g;
  out.final_k = k;
  if (stop_when_k_exhausted && k <= 0) {
    out.stopped_early = true;
    return out;
  }
  while (true) {
    auto app = find_rule(out.final_graph);
    if (!app) {
      if (out.final_graph.edge_count() > 0)
        fail(Errc::internal, "no rule applies to a connected graph with an edge");
      break;
    }
    auto [next, next_k] = apply_rule(out.final_graph, out.final_k, *app);
    out.final_graph = std::move(next);
    out.final_k = next_k;
    out.marked_set.insert(out.marked_set.end(), app->marked.begin(), app->marked.end());
    out.trace.push_back(std::move(*app));
    if (stop_when_k_exhausted && out.final_k <= 0) {
      out.stopped_early = true;
      break;
    }
  }
  std::sort(out.marked_set.begin(), out.marked_set.end());
  return out;
}

std::string trace_line(const RuleApplication& app) {
  auto join = [](const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ',';
      os << xs[i];
    }
    return os.str();
  };
  std::ostringstream os;
  os << "rule=" << app.rule_id << " deleted=" << join(app.deleted)
     << " marked=" << join(app.marked) << " kdelta=" << app.k_delta;
  return os.str();
}

}  // namespace sgmc::oneway
