/*
 * Copyright 2026 sgmc developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "generators.hpp"
#include "instance_io.hpp"
#include "sgmc.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitOracleMismatch = 3;

struct GraphHandle {
  sgmc_graph* g = nullptr;
  ~GraphHandle() { sgmc_graph_free(g); }
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "sgmc: " << message << "\n";
  std::exit(code);
}

void check(sgmc_status status) {
  if (status == SGMC_OK) return;
  int code = status == SGMC_ERR_INVALID ? kExitParse : kExitUsage;
  die(code, std::string(sgmc_status_name(status)) + ": " + sgmc_last_error());
}

sgmc_cli::Instance load_or_die(const std::string& path) {
  try {
    return sgmc_cli::load_instance(path);
  } catch (const sgmc_cli::ParseError& e) {
    die(kExitParse, path + ": " + e.what());
  }
}

void build_graph(const sgmc_cli::Instance& inst, GraphHandle& handle) {
  std::vector<int> us, vs;
  std::vector<char> signs;
  for (const auto& e : inst.edges) {
    us.push_back(e.u);
    vs.push_back(e.v);
    signs.push_back(e.sign);
  }
  check(sgmc_graph_create(inst.n, us.data(), vs.data(), signs.data(), us.size(), &handle.g));
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

std::vector<int> fetch_ints(sgmc_status (*fn)(const sgmc_graph*, int*, size_t, size_t*),
                            const sgmc_graph* g) {
  size_t len = 0;
  fn(g, nullptr, 0, &len);
  std::vector<int> buf(len);
  check(fn(g, buf.data(), buf.size(), &len));
  buf.resize(len);
  return buf;
}

int resolve_k(const std::optional<int>& flag_k, const sgmc_cli::Instance& inst,
              const std::string& what) {
  if (flag_k) return *flag_k;
  if (inst.k) return *inst.k;
  die(kExitUsage, what + ": no parameter k (pass --k or store a k line in the instance)");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) die(kExitUsage, "cannot write '" + out_path + "'");
  out << text;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_balance(const std::string& file) {
  GraphHandle h;
  build_graph(load_or_die(file), h);
  int balanced = 0;
  size_t len = 0;
  sgmc_balance(h.g, &balanced, nullptr, 0, &len);
  std::vector<int> buf(len);
  check(sgmc_balance(h.g, &balanced, buf.data(), buf.size(), &len));
  buf.resize(len);
  if (balanced)
    std::cout << "balanced W=" << join(buf) << "\n";
  else
    std::cout << "unbalanced cycle=" << join(buf) << "\n";
  return 0;
}

int cmd_bound(const std::string& file) {
  GraphHandle h;
  build_graph(load_or_die(file), h);
  long long quarters = 0;
  int comps = 0;
  check(sgmc_bound(h.g, &quarters, &comps));
  std::cout << "ptq=" << quarters << " pt=" << quarters << "/4 components=" << comps << "\n";
  return 0;
}

int cmd_solve(const std::string& file, std::optional<int> flag_k, bool check_oracle,
              int oracle_limit) {
  auto inst = load_or_die(file);
  int k = resolve_k(flag_k, inst, "solve");
  GraphHandle h;
  build_graph(inst, h);

  sgmc_solve_result result{};
  check(sgmc_solve(h.g, k, /*exact_beta=*/1, &result));
  const char* route = result.route == SGMC_ROUTE_EARLY_YES ? "early-yes-by-rules"
                                                            : "full-enumeration";
  std::cout << "answer=" << (result.answer ? "yes" : "no") << " beta=" << result.beta
            << " route=" << route << "\n";

  if (check_oracle) {
    if (sgmc_graph_vertex_count(h.g) > oracle_limit) {
      std::cerr << "sgmc: oracle check skipped (graph larger than limit " << oracle_limit
                << ")\n";
      return 0;
    }
    long long oracle_beta = 0;
    int oracle_yes = 0;
    check(sgmc_oracle_beta(h.g, oracle_limit, &oracle_beta));
    check(sgmc_oracle_decide(h.g, k, oracle_limit, &oracle_yes));
    if (oracle_beta != result.beta || oracle_yes != result.answer)
      die(kExitOracleMismatch,
          "oracle mismatch: solver answer=" + std::string(result.answer ? "yes" : "no") +
              " beta=" + std::to_string(result.beta) + ", oracle answer=" +
              (oracle_yes ? "yes" : "no") + " beta=" + std::to_string(oracle_beta));
  }
  return 0;
}

int cmd_kernelize(const std::string& file, std::optional<int> flag_k,
                  const std::string& out_path) {
  auto inst = load_or_die(file);
  int k = resolve_k(flag_k, inst, "kernelize");
  GraphHandle h;
  build_graph(inst, h);

  sgmc_kernel_result* result = nullptr;
  check(sgmc_kernelize(h.g, k, &result));
  std::unique_ptr<sgmc_kernel_result, decltype(&sgmc_kernel_result_free)> guard(
      result, sgmc_kernel_result_free);

  if (sgmc_kernel_resolved_yes(result)) {
    std::cout << "answer=yes reason=" << sgmc_kernel_reason_name(sgmc_kernel_reason(result))
              << "\n";
    return 0;
  }

  const sgmc_graph* kernel = sgmc_kernel_graph(result);
  int kernel_k = sgmc_kernel_k(result);
  int n = sgmc_graph_vertex_count(kernel);
  std::cout << "kernel n=" << n << " k=" << kernel_k << " bound=B(" << k
            << ")=" << sgmc_kernel_bound(k) << "\n";

  if (!out_path.empty()) {
    auto vertices = fetch_ints(sgmc_graph_vertices, kernel);
    size_t m = 0;
    sgmc_graph_edges(kernel, nullptr, nullptr, nullptr, 0, &m);
    std::vector<int> us(m), vs(m);
    std::vector<char> signs(m);
    check(sgmc_graph_edges(kernel, us.data(), vs.data(), signs.data(), m, &m));

    // Serialization compacts identifiers.
    std::vector<int> compact(vertices.empty() ? 1 : vertices.back() + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) compact[vertices[i]] = static_cast<int>(i) + 1;

    sgmc_cli::Instance out_inst;
    out_inst.n = static_cast<int>(vertices.size());
    out_inst.k = kernel_k;
    for (size_t i = 0; i < m; ++i)
      out_inst.edges.push_back({compact[us[i]], compact[vs[i]], signs[i]});

    size_t s_len = 0;
    sgmc_kernel_marked(result, nullptr, 0, &s_len);
    std::vector<int> s_buf(s_len);
    check(sgmc_kernel_marked(result, s_buf.data(), s_buf.size(), &s_len));
    std::ostringstream s_line;
    s_line << "S";
    for (int v : s_buf) s_line << " " << compact[v];

    std::string bytes = read_file_bytes(file);
    char hash_hex[17];
    std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                  static_cast<unsigned long long>(sgmc_cli::fnv1a64(bytes)));
    std::vector<std::string> comments{std::string("kernel-of ") + hash_hex, s_line.str()};
    write_output(sgmc_cli::serialize_instance(out_inst, comments), out_path);
  }
  return 0;
}

int cmd_oracle(const std::string& file, int limit) {
  GraphHandle h;
  build_graph(load_or_die(file), h);
  long long beta = 0;
  check(sgmc_oracle_beta(h.g, limit, &beta));
  std::cout << "beta=" << beta << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for balanced subgraphs of signed graphs above the tight lower bound"};
  app.require_subcommand(1);

  std::string file, out_path;
  std::optional<int> flag_k;
  bool check_oracle = false;
  int oracle_limit = 24;

  auto* balance = app.add_subcommand("balance", "test balance, print a switch set or an odd cycle");
  balance->add_option("file", file)->required();

  auto* bound = app.add_subcommand("bound", "print the quarter-integer lower bound");
  bound->add_option("file", file)->required();

  auto* solve = app.add_subcommand("solve", "decide the instance and compute exact beta");
  solve->add_option("file", file)->required();
  solve->add_option("--k", flag_k, "parameter k (overrides the instance file)");
  solve->add_flag("--check-oracle", check_oracle, "cross-check against brute force");
  solve->add_option("--oracle-limit", oracle_limit, "vertex limit for --check-oracle");

  auto* kernelize = app.add_subcommand("kernelize", "produce an equivalent bounded-size instance");
  kernelize->add_option("file", file)->required();
  kernelize->add_option("--k", flag_k, "parameter k (overrides the instance file)");
  kernelize->add_option("--out", out_path, "write the kernel instance here");

  auto* oracle = app.add_subcommand("oracle", "exact beta by brute force");
  oracle->add_option("file", file)->required();
  oracle->add_option("--limit", oracle_limit, "vertex limit");

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int gn = 0, gcliques = 0, gsize = 0, gscount = 0, gk = 0;
  double gp = 0.5, gneg = 0.5;
  std::uint64_t gseed = 0;
  std::optional<int> grandom_k;

  auto* gen_random = gen->add_subcommand("random", "connected random signed graph");
  gen_random->add_option("--n", gn)->required();
  gen_random->add_option("--p", gp, "edge probability")->required();
  gen_random->add_option("--neg", gneg, "negative-sign probability")->required();
  gen_random->add_option("--seed", gseed)->required();
  gen_random->add_option("--k", grandom_k, "store parameter k in the file");
  gen_random->add_option("--out", out_path, "output path (default stdout)");

  auto* gen_foc = gen->add_subcommand("foc", "planted forest of cliques with an attachment set");
  gen_foc->add_option("--cliques", gcliques)->required();
  gen_foc->add_option("--size", gsize, "maximum clique size")->required();
  gen_foc->add_option("--s-count", gscount)->required();
  gen_foc->add_option("--k", gk)->required();
  gen_foc->add_option("--neg", gneg, "negative-sign probability (default 0.9)")->default_val(0.9);
  gen_foc->add_option("--seed", gseed)->required();
  gen_foc->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sgmc: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (balance->parsed()) return cmd_balance(file);
    if (bound->parsed()) return cmd_bound(file);
    if (solve->parsed()) return cmd_solve(file, flag_k, check_oracle, oracle_limit);
    if (kernelize->parsed()) return cmd_kernelize(file, flag_k, out_path);
    if (oracle->parsed()) return cmd_oracle(file, oracle_limit);
    if (gen->parsed()) {
      sgmc_cli::Generated generated;
      if (gen_random->parsed())
        generated = sgmc_cli::gen_random(gn, gp, gneg, gseed, grandom_k);
      else
        generated = sgmc_cli::gen_foc(gcliques, gsize, gscount, gk, gneg, gseed);
      write_output(sgmc_cli::serialize_instance(generated.instance, generated.comments),
                   out_path);
      return 0;
    }
  } catch (const sgmc_cli::ParseError& e) {
    die(kExitUsage, e.what());
  }
  return kExitUsage;
}
