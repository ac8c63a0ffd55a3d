#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

/// Run the CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SKEINLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return skeinlab::test::data_path(name);
}

}  // namespace

TEST_CASE("cheb prints the monic Chebyshev-like polynomial") {
  const RunResult r = run_cli("cheb 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^5 - 5*x^3 + 5*x\n");
}

TEST_CASE("bracket evaluates PD files") {
  CHECK(run_cli("bracket " + data("empty.json")).output == "1\n");
  const RunResult unknot = run_cli("bracket " + data("unknot.json"));
  CHECK(unknot.exit_code == 0);
  CHECK(unknot.output == "-A^2 - A^-2\n");
}

TEST_CASE("exit codes: usage, validation, invariant") {
  CHECK(run_cli("no-such-command").exit_code == 64);
  CHECK(run_cli("bracket").exit_code == 64);
  CHECK(run_cli("bracket /nonexistent/file.json").exit_code == 2);
  // even root order is rejected during validation
  CHECK(run_cli("bracket " + data("empty.json") + " --at-root 4,1").exit_code == 2);

  // a bundle whose matrices cannot satisfy the commutation law fails with 3
  const fs::path bad = fs::temp_directory_path() / "skeinlab_bad_bundle.json";
  {
    std::ofstream f(bad);
    f << R"({"N":3,"k":1,"dimension":1,
             "omega":[[0,2],[-2,0]],
             "scalars":[[1,0],[1,0]],
             "matrices":[[[[1,0]]],[[[1,0]]]]})";
  }
  CHECK(run_cli("qrep verify " + bad.string()).exit_code == 3);
  fs::remove(bad);
}

TEST_CASE("skein nf rewrites into normal form") {
  const RunResult r = run_cli("skein nf \"X2*X1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(-A^3 + A^-1)*X3 + (A^2)*X1*X2\n");
  CHECK(run_cli("skein nf \"X4\"").exit_code == 2);
}

TEST_CASE("tt basis reports the expected rank") {
  const RunResult r = run_cli("tt basis " + data("punctured_torus.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rank 3") != std::string::npos);
}

TEST_CASE("corpus generation is deterministic and re-parseable") {
  const fs::path dir1 = fs::temp_directory_path() / "skeinlab_corpus_a";
  const fs::path dir2 = fs::temp_directory_path() / "skeinlab_corpus_b";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  REQUIRE(run_cli("corpus --out " + dir1.string() + " --count 10 --seed 5").exit_code == 0);
  REQUIRE(run_cli("corpus --out " + dir2.string() + " --count 10 --seed 5").exit_code == 0);

  int diagrams = 0;
  for (const auto& entry : fs::directory_iterator(dir1)) {
    const std::string name = entry.path().filename().string();
    const std::string body = skeinlab::test::slurp(entry.path().string());
    CHECK(body == skeinlab::test::slurp((dir2 / name).string()));
    if (name.rfind("pd", 0) == 0) {
      ++diagrams;
      // each emitted diagram must parse and evaluate under the same validator
      CHECK(run_cli("bracket " + entry.path().string()).exit_code == 0);
    }
  }
  CHECK(diagrams == 10);
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}
