/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "kernelizer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "decomposition.hpp"
#include "mcwv.hpp"
#include "oneway.hpp"

namespace sgmc::kernel {

namespace {

std::vector<char> member_mask(const SignedGraph& g, std::span<const int> xs) {
  std::vector<char> mask(g.max_vertex_id() + 1, 0);
  for (int v : xs) {
    if (!g.has_vertex(v)) fail(Errc::invalid_argument, "kernel rule: unknown vertex");
    mask[v] = 1;
  }
  return mask;
}

// Interior of the block within g - s: members whose (g - s)-neighborhood
// stays inside the block.
std::vector<int> block_interior(const SignedGraph& g, const std::vector<char>& in_s,
                                std::span<const int> block) {
  std::vector<char> in_block(g.max_vertex_id() + 1, 0);
  for (int v : block) in_block[v] = 1;
  std::vector<int> interior;
  for (int v : block) {
    bool inside = true;
    for (const auto& nb : g.neighbors(v))
      if (!in_s[nb.v] && !in_block[nb.v]) {
        inside = false;
        break;
      }
    if (inside) interior.push_back(v);
  }
  std::sort(interior.begin(), interior.end());
  return interior;
}

// Signed neighborhood in S of a vertex, as a sortable signature.
std::pair<std::vector<int>, std::vector<int>> s_signature(const SignedGraph& g,
                                                          const std::vector<char>& in_s, int v) {
  std::pair<std::vector<int>, std::vector<int>> sig;
  for (const auto& nb : g.neighbors(v)) {
    if (!in_s[nb.v]) continue;
    (nb.sign == Sign::positive ? sig.first : sig.second).push_back(nb.v);
  }
  return sig;
}

}  // namespace

const char* reason_name(YesReason reason) {
  switch (reason) {
    case YesReason::k_nonpositive: return "k-nonpositive";
    case YesReason::bound_leafs: return "threshold-boundLeafs";
    case YesReason::path_length: return "threshold-pathlength";
    case YesReason::block_size: return "threshold-blocksize";
  }
  return "unknown";
}

std::optional<TwoWayOutcome> rule8(const SignedGraph& g, int k, std::span<const int> s,
                                   std::span<const int> block) {
  // Deleting both endpoints of a lone edge would erase the whole graph; the
  // quarter-bound accounting behind the rule assumes the component survives,
  // and rule 9 handles that graph anyway.
  if (g.vertex_count() <= 2) return std::nullopt;
  auto in_s = member_mask(g, s);
  auto interior = block_interior(g, in_s, block);

  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> classes;
  std::vector<const std::vector<int>*> ordered;  // by smallest member
  for (int v : interior) {
    auto& members = classes[s_signature(g, in_s, v)];
    if (members.empty()) ordered.push_back(&members);
    members.push_back(v);
  }
  long long q = static_cast<long long>(block.size());
  for (const auto* members : ordered) {
    long long sig_size = 0;
    {
      auto sig = s_signature(g, in_s, members->front());
      sig_size = static_cast<long long>(sig.first.size() + sig.second.size());
    }
    long long x = static_cast<long long>(members->size());
    if (2 * x > q + sig_size && q + sig_size >= 2) {
      TwoWayOutcome out;
      out.app = {8, {(*members)[0], (*members)[1]}, 0, 0};
      out.graph = delete_vertices(g, out.app.deleted);
      out.k = k;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<TwoWayOutcome> rule9(const SignedGraph& g, int k, std::span<const int> s,
                                   std::span<const int> block) {
  if (block.size() % 2 != 0 || block.empty()) return std::nullopt;
  auto in_s = member_mask(g, s);
  auto interior = block_interior(g, in_s, block);
  std::vector<int> s_free;
  for (int v : interior)
    if (s_signature(g, in_s, v).first.empty() && s_signature(g, in_s, v).second.empty())
      s_free.push_back(v);
  if (s_free.size() < block.size() / 2) return std::nullopt;
  // Lowest-id half-sized subset; its lowest member goes.
  TwoWayOutcome out;
  out.app = {9, {s_free[0]}, 0, 1};
  out.graph = delete_vertices(g, out.app.deleted);
  out.k = k - 1;
  return out;
}

std::optional<TwoWayOutcome> rule10(const SignedGraph& g, int k, std::span<const int> s,
                                    std::span<const int> block) {
  if (block.size() != 3) return std::nullopt;
  member_mask(g, s);  // validates s
  int u = 0, x = 0, y = 0;
  for (int cand : block) {
    int o1 = 0, o2 = 0;
    for (int other : block)
      if (other != cand) (o1 == 0 ? o1 : o2) = other;
    if (g.degree(cand) == 2 && g.has_edge(cand, o1) && g.has_edge(cand, o2)) {
      u = cand;
      x = std::min(o1, o2);
      y = std::max(o1, o2);
      break;
    }
  }
  if (u == 0) return std::nullopt;

  SignedGraph gu = delete_vertices(g, std::array{u});
  if (!gu.has_edge(x, y)) return std::nullopt;
  // xy is a bridge in g - u iff removing it separates x from y.
  bool bridge = true;
  for (const auto& comp : components(without_edge(gu, x, y)))
    if (std::binary_search(comp.begin(), comp.end(), x) &&
        std::binary_search(comp.begin(), comp.end(), y)) {
      bridge = false;
      break;
    }

  TwoWayOutcome out;
  if (bridge) {
    // Contract {x,y,u} into a fresh vertex inheriting the outside signed
    // neighborhood; x and y share no neighbor in g - u (the edge bridges),
    // so no parallel pair can arise.
    int z = g.max_vertex_id() + 1;
    std::vector<int> verts;
    for (int v : g.vertices())
      if (v != x && v != y && v != u) verts.push_back(v);
    verts.push_back(z);
    std::vector<RawEdge> es;
    for (const SignedEdge& e : g.edges()) {
      bool at_x = e.u == x || e.v == x, at_y = e.u == y || e.v == y;
      bool at_u = e.u == u || e.v == u;
      if (at_u || (at_x && at_y)) continue;
      if (at_x || at_y) {
        int other = (e.u == x || e.u == y) ? e.v : e.u;
        es.push_back({z, other, e.sign});
      } else {
        es.push_back({e.u, e.v, e.sign});
      }
    }
    out.app = {10, {u, x, y}, z, 0};
    out.graph = SignedGraph::from_parts(std::move(verts), es);
    out.k = k;
  } else {
    out.app = {10, {u}, 0, 1};
    out.graph = without_edge(delete_vertices(g, std::array{u}), x, y);
    out.k = k - 1;
  }
  return out;
}

std::optional<TwoWayOutcome> rule11(const SignedGraph& g, int k, std::span<const int> s,
                                    std::span<const int> component) {
  auto in_s = member_mask(g, s);
  std::vector<int> comp(component.begin(), component.end());
  std::sort(comp.begin(), comp.end());
  int contact = 0;
  for (int v : comp)
    for (const auto& nb : g.neighbors(v))
      if (in_s[nb.v] && nb.v != contact) {
        if (contact != 0) return std::nullopt;  // touches two vertices of S
        contact = nb.v;
      }
  if (contact == 0) return std::nullopt;

  // One MCWV run resolves the component: unit payoffs for the sides the
  // contact's edges want.
  mcwv::WeightedInstance inst;
  inst.graph = induced(g, comp);
  inst.w1.assign(g.max_vertex_id() + 1, 0);
  inst.w2.assign(g.max_vertex_id() + 1, 0);
  for (const auto& nb : g.neighbors(contact)) {
    if (!std::binary_search(comp.begin(), comp.end(), nb.v)) continue;
    if (nb.sign == Sign::positive)
      inst.w1[nb.v] = 1;
    else
      inst.w2[nb.v] = 1;
  }
  long long best = mcwv::solve(inst).value;

  std::vector<int> with_s = comp;
  with_s.push_back(contact);
  long long slack = 4 * best - quarter_bound(induced(g, with_s)).quarters;
  if (slack < 0) fail(Errc::internal, "rule 11: component value below the lower bound");

  TwoWayOutcome out;
  out.app = {11, std::move(comp), 0, static_cast<int>(slack)};
  out.graph = delete_vertices(g, out.app.deleted);
  out.k = k - out.app.k_delta;
  return out;
}

namespace {

using RuleFn = std::optional<TwoWayOutcome> (*)(const SignedGraph&, int, std::span<const int>,
                                                std::span<const int>);

void for_each_application(const SignedGraph& g, int k, std::span<const int> s, bool first_only,
                          std::vector<TwoWayOutcome>& out) {
  SignedGraph h = delete_vertices(g, s);
  auto bd = decomp::blocks(h);
  const RuleFn block_rules[] = {rule8, rule9, rule10};
  for (RuleFn rule : block_rules) {
    for (const auto& block : bd.blocks) {
      if (auto r = rule(g, k, s, block)) {
        out.push_back(std::move(*r));
        if (first_only) return;
      }
    }
  }
  for (const auto& comp : components(h)) {
    if (auto r = rule11(g, k, s, comp)) {
      out.push_back(std::move(*r));
      if (first_only) return;
    }
  }
}

}  // namespace

std::optional<TwoWayOutcome> find_two_way(const SignedGraph& g, int k, std::span<const int> s) {
  std::vector<TwoWayOutcome> out;
  for_each_application(g, k, s, true, out);
  if (out.empty()) return std::nullopt;
  return std::move(out.front());
}

std::vector<TwoWayOutcome> enumerate_two_way(const SignedGraph& g, int k,
                                             std::span<const int> s) {
  std::vector<TwoWayOutcome> out;
  for_each_application(g, k, s, false, out);
  return out;
}

std::optional<YesReason> thresholds(const SignedGraph& g, int k, std::span<const int> s) {
  auto labels = decomp::label_blocks(g, s);
  auto in_s = member_mask(g, s);
  long long s_size = static_cast<long long>(s.size());

  // Per-block S-vertices adjacent to the interior.
  auto interior_contacts = [&](std::size_t bi) {
    std::vector<int> contacts;
    for (int v : labels.interior[bi])
      for (const auto& nb : g.neighbors(v))
        if (in_s[nb.v]) contacts.push_back(nb.v);
    std::sort(contacts.begin(), contacts.end());
    contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
    return contacts;
  };

  long long total_contacts = 0;
  for (std::size_t bi = 0; bi < labels.decomposition.blocks.size(); ++bi)
    if (!labels.path_block[bi])
      total_contacts += static_cast<long long>(interior_contacts(bi).size());
  if (total_contacts >= s_size * (2 * s_size - 3 + 2 * k) + 1) return YesReason::bound_leafs;

  long long longest = 0;
  for (const auto& path : labels.pure_paths)
    longest = std::max(longest, static_cast<long long>(path.size()));
  if (longest >= s_size + k + 1) return YesReason::path_length;

  for (std::size_t bi = 0; bi < labels.decomposition.blocks.size(); ++bi) {
    long long contacts = static_cast<long long>(interior_contacts(bi).size());
    if (contacts < 1) continue;  // the certificate construction needs a contact
    long long size = static_cast<long long>(labels.decomposition.blocks[bi].size());
    long long ext = static_cast<long long>(labels.exterior[bi].size());
    if (size >= 2 * ext + contacts * (2 * s_size + 2 * k + 1)) return YesReason::block_size;
  }
  return std::nullopt;
}

long long size_bound(int k) {
  long long kk = k;
  if (kk < 0) kk = 0;
  return 3 * kk + 24 * kk * kk * (8 * kk - 3) + 24 * kk * (8 * kk - 3) +
         3 * kk * (8 * kk - 3) * (8 * kk + 1);
}

namespace {

void check_invariants(const SignedGraph& g, std::span<const int> s,
                      const std::vector<TwoWayApplication>& trace) {
  auto dump = [&trace]() {
    std::ostringstream os;
    for (const auto& app : trace) os << "\n  " << trace_line(app);
    return os.str();
  };
  if (!is_connected(g))
    fail(Errc::internal, "kernelizer: connectivity lost" + dump());
  SignedGraph h = delete_vertices(g, s);
  if (!decomp::is_forest_of_cliques(h))
    fail(Errc::internal, "kernelizer: remainder is not a forest of cliques" + dump());
  for (const SignedEdge& e : h.edges())
    if (e.sign == Sign::positive)
      fail(Errc::internal, "kernelizer: positive edge outside S" + dump());
}

}  // namespace

KernelOutcome kernelize(const SignedGraph& g, int k) {
  if (!is_connected(g)) fail(Errc::invalid_argument, "kernelize requires a connected graph");

  KernelOutcome out;
  if (k <= 0) {
    out.resolved_yes = true;
    out.reason = YesReason::k_nonpositive;
    return out;
  }
  auto reduction = oneway::reduce(g, k, true);
  if (reduction.final_k <= 0) {
    out.resolved_yes = true;
    out.reason = YesReason::k_nonpositive;
    return out;
  }
  out.marked_set = reduction.marked_set;

  // The one-way run only serves to find S; the two-way stage restarts from
  // the original graph and parameter.
  std::vector<int> rest;
  {
    std::vector<char> in_s(g.max_vertex_id() + 1, 0);
    for (int v : out.marked_set) in_s[v] = 1;
    for (int v : g.vertices())
      if (!in_s[v]) rest.push_back(v);
  }
  SignedGraph cur = switched(g, decomp::switch_to_all_negative(g, rest));
  int cur_k = k;

  while (true) {
    check_invariants(cur, out.marked_set, out.trace);
    auto step = find_two_way(cur, cur_k, out.marked_set);
    if (!step) break;
    out.trace.push_back(step->app);
    cur = std::move(step->graph);
    cur_k = step->k;
    if (cur_k <= 0) {
      out.resolved_yes = true;
      out.reason = YesReason::k_nonpositive;
      return out;
    }
  }

  if (auto reason = thresholds(cur, cur_k, out.marked_set)) {
    out.resolved_yes = true;
    out.reason = *reason;
    return out;
  }

  if (cur.vertex_count() > size_bound(k))
    fail(Errc::internal, "kernelizer: emitted kernel exceeds the size bound");
  out.kernel = std::move(cur);
  out.kernel_k = cur_k;
  return out;
}

std::string trace_line(const TwoWayApplication& app) {
  std::ostringstream os;
  os << "rule=" << app.rule_id << " deleted=";
  for (std::size_t i = 0; i < app.deleted.size(); ++i) {
    if (i) os << ',';
    os << app.deleted[i];
  }
  os << " added=";
  if (app.added)
    os << app.added;
  else
    os << '-';
  os << " kdelta=" << app.k_delta;
  return os.str();
}

}  // namespace sgmc::kernel
