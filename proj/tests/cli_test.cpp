// End-to-end checks of the command-line front end: spawns the real binary,
// captures stdout and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "instance_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SGMC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> chunk;
  while (fgets(chunk.data(), chunk.size(), pipe)) r.out += chunk.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  std::string path = std::string("/tmp/sgmc_cli_test_") + name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("bound command") {
  auto path = temp_file("p3.sg", "p signed 3 2\ne 1 2 -\ne 2 3 -\n");
  auto r = run("bound " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "ptq=6 pt=6/4 components=1\n");
}

TEST_CASE("balance command") {
  auto balanced = temp_file("bal.sg", "p signed 3 3\ne 1 2 +\ne 1 3 -\ne 2 3 -\n");
  auto r1 = run("balance " + balanced);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == "balanced W=3\n");

  auto odd = temp_file("odd.sg", "p signed 3 3\ne 1 2 +\ne 1 3 +\ne 2 3 -\n");
  auto r2 = run("balance " + odd);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.rfind("unbalanced cycle=", 0) == 0);
}

TEST_CASE("solve command with oracle check") {
  auto k4 = temp_file("k4.sg",
                      "p signed 4 6\ne 1 2 -\ne 1 3 -\ne 1 4 -\ne 2 3 -\ne 2 4 -\ne 3 4 -\n");
  auto yes = run("solve " + k4 + " --k 1 --check-oracle");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "answer=yes beta=4 route=full-enumeration\n");
  auto no = run("solve " + k4 + " --k 2");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "answer=no beta=4 route=full-enumeration\n");
}

TEST_CASE("solve reads k from the file and the flag overrides it") {
  auto file = temp_file("k_in_file.sg", "p signed 2 1\nk 2\ne 1 2 -\n");
  auto with_file_k = run("solve " + file);
  CHECK(with_file_k.exit_code == 0);
  CHECK(with_file_k.out.rfind("answer=no", 0) == 0);
  auto with_flag = run("solve " + file + " --k 1");
  CHECK(with_flag.out.rfind("answer=yes", 0) == 0);
  auto missing = temp_file("no_k.sg", "p signed 2 1\ne 1 2 -\n");
  CHECK(run("solve " + missing).exit_code == 1);
}

TEST_CASE("kernelize command writes a loadable kernel") {
  auto k4 = temp_file("k4b.sg",
                      "p signed 4 6\ne 1 2 -\ne 1 3 -\ne 1 4 -\ne 2 3 -\ne 2 4 -\ne 3 4 -\n");
  auto out_path = std::string("/tmp/sgmc_cli_test_kernel.sg");
  auto r = run("kernelize " + k4 + " --k 2 --out " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("kernel n=", 0) == 0);
  CHECK(r.out.find("bound=B(2)=3204") != std::string::npos);

  auto kernel = sgmc_cli::load_instance(out_path);
  CHECK(kernel.k.has_value());
  auto solve_kernel = run("solve " + out_path);
  CHECK(solve_kernel.out.rfind("answer=no", 0) == 0);  // same answer as the original

  // Provenance and annotation comments.
  std::ifstream kernel_file(out_path);
  std::string line1, line2;
  std::getline(kernel_file, line1);
  std::getline(kernel_file, line2);
  CHECK(line1.rfind("c kernel-of ", 0) == 0);
  CHECK(line1.size() == std::string("c kernel-of ").size() + 16);
  CHECK(line2.rfind("c S", 0) == 0);

  auto resolved = temp_file("tri.sg", "p signed 3 3\ne 1 2 +\ne 1 3 +\ne 2 3 +\n");
  auto r2 = run("kernelize " + resolved + " --k 3");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "answer=yes reason=k-nonpositive\n");
}

TEST_CASE("oracle command") {
  auto k4 = temp_file("k4c.sg",
                      "p signed 4 6\ne 1 2 -\ne 1 3 -\ne 1 4 -\ne 2 3 -\ne 2 4 -\ne 3 4 -\n");
  auto r = run("oracle " + k4);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "beta=4\n");
  CHECK(run("oracle " + k4 + " --limit 3").exit_code != 0);
}

TEST_CASE("gen random is byte-identical per seed and connected") {
  auto a = run("gen random --n 6 --p 0.5 --neg 0.7 --seed 42");
  auto b = run("gen random --n 6 --p 0.5 --neg 0.7 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto path = temp_file("gen.sg", a.out);
  CHECK(run("bound " + path).exit_code == 0);
}

TEST_CASE("gen foc feeds kernelize") {
  auto g = run("gen foc --cliques 3 --size 7 --s-count 2 --k 2 --seed 5");
  CHECK(g.exit_code == 0);
  auto path = temp_file("foc.sg", g.out);
  auto r = run("kernelize " + path);
  CHECK(r.exit_code == 0);
}

TEST_CASE("exit codes: usage and parse errors") {
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("solve").exit_code == 1);
  auto bad = temp_file("bad.sg", "p signed 2 1\ne 1 1 +\n");
  CHECK(run("bound " + bad).exit_code == 2);
  CHECK(run("bound /tmp/sgmc_does_not_exist.sg").exit_code == 2);
}
