// End-to-end tests against the built CLI binary: exit codes, JSON output,
// cache determinism.  The binary path is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args, const std::string& cache_env = "") {
  const std::filesystem::path errfile =
      std::filesystem::temp_directory_path() / ("afflag-cli-err-" + std::to_string(::getpid()));
  std::string cmd;
  if (!cache_env.empty()) cmd += "AFFLAG_CACHE_DIR='" + cache_env + "' ";
  cmd += std::string(AFFLAG_CLI_PATH) + " " + args + " 2>" + errfile.string();
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(errfile);
  std::stringstream ss;
  ss << err.rdbuf();
  result.err = ss.str();
  std::filesystem::remove(errfile);
  return result;
}

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("afflag-cli-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("struct-const spot value and method agreement") {
  const auto dir = fresh_dir("sc");
  const auto delta =
      run_cli("struct-const -n 2 \"s1 s0\" \"s0\" \"s0\" --json --method delta", dir.string());
  CHECK(delta.exit_code == 0);
  CHECK(delta.out == "[\n  {\n    \"coeff\": 2,\n    \"exps\": [\n      0\n    ]\n  }\n]\n");
  const auto subset =
      run_cli("struct-const -n 2 \"s1 s0\" \"s0\" \"s0\" --json --method subset", dir.string());
  CHECK(subset.exit_code == 0);
  CHECK(subset.out == delta.out);

  // Byte-for-byte agreement over a sweep of inputs, with and without cache.
  for (const std::string w : {"\"s1 s0\"", "\"s0 s1 s0\"", "\"[0,3]\""})
    for (const std::string u : {"id", "\"s0\"", "\"s1\""})
      for (const std::string v : {"id", "\"s0\"", "\"s1 s0\""}) {
        const std::string args = "struct-const -n 2 " + w + " " + u + " " + v + " --json";
        const auto a = run_cli(args + " --method delta", dir.string());
        const auto b = run_cli(args + " --method subset", dir.string());
        const auto c = run_cli(args + " --method delta --no-cache");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
      }
  std::filesystem::remove_all(dir);
}

TEST_CASE("strips output") {
  const auto r = run_cli("strips -n 2 \"s1 s0\" 2 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "[\n  {\n    \"inside\": [\n      -1,\n      4\n    ],\n"
        "    \"outside\": [\n      1,\n      2\n    ],\n"
        "    \"covers\": [\n      {\n        \"i\": 0,\n        \"j\": 3,\n        \"a\": 1\n      },\n"
        "      {\n        \"i\": 0,\n        \"j\": 1,\n        \"a\": 0\n      }\n    ]\n  }\n]\n");
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run_cli("covers -n 2 \"[1,3]\"").exit_code == 2);
  CHECK(run_cli("covers -n 2 \"[1,3]\"").err.find("sum(w(i)-i)") != std::string::npos);
  CHECK(run_cli("covers -n 2").exit_code == 2);          // missing element
  CHECK(run_cli("covers \"[1,2]\"").exit_code == 2);     // missing rank
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                      // subcommand required
  CHECK(run_cli("kschur -n 2 \"2\"").exit_code == 2);    // part too large
  CHECK(run_cli("struct-const -n 2 id id id --method bogus").exit_code == 2);
}

TEST_CASE("verification sweeps exit zero and are cache-deterministic") {
  const auto dir = fresh_dir("sweep");
  const auto cold = run_cli("pieri-check -n 2 --max-len 4 --json", dir.string());
  CHECK(cold.exit_code == 0);
  REQUIRE(std::filesystem::exists(dir));
  const auto warm = run_cli("pieri-check -n 2 --max-len 4 --json", dir.string());
  CHECK(warm.exit_code == 0);
  CHECK(cold.out == warm.out);
  const auto nocache = run_cli("pieri-check -n 2 --max-len 4 --json --no-cache");
  CHECK(nocache.out == cold.out);
  CHECK(cold.out.find("\"pass\": true") != std::string::npos);

  const auto cauchy = run_cli("cauchy-check -n 2 --degree 3 --json");
  CHECK(cauchy.exit_code == 0);
  CHECK(cauchy.out.find("\"pass\": true") != std::string::npos);
  CHECK(run_cli("cauchy-check -n 2 --degree 3 --json").out == cauchy.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("remaining subcommands produce the documented values") {
  CHECK(run_cli("kschur -n 2 \"1,1\"").out == "m[2] + 2*m[1,1]\n");
  CHECK(run_cli("weak-schur -n 2 \"s1 s0\" id").out == "m[1,1]\n");
  CHECK(run_cli("cap -n 2 \"s0\" \"s1 s0\" --no-cache").out == "2*A[0,3] + A[2,1]\n");
  CHECK(run_cli("strong-schur -n 2 \"s1 s0\" id").out == "m[2] + 2*m[1,1]\n");
  CHECK(run_cli("strong-schur -n 2 \"s1\" id").out == "0\n");
  CHECK(run_cli("strong-expand -n 2 \"s1 s0\" id --no-cache").out == "v=[-1,4] coeff=1\n");
  CHECK(run_cli("covers -n 2 \"s1 s0\"").out ==
        "v=[0,3] t=t(2,5)\nv=[2,1] t=t(2,3)\ntotal 2\n");
  CHECK(run_cli("marked-covers -n 2 \"s1 s0\"").out ==
        "outside=[0,3] i=0 j=3 a=1\noutside=[0,3] i=-2 j=1 a=-1\n"
        "outside=[2,1] i=0 j=1 a=-1\ntotal 3\n");
  const auto copro = run_cli("coproduct -n 2 \"s0\" --no-cache");
  CHECK(copro.exit_code == 0);
  CHECK(copro.out ==
        "u=[0,3] v=[0,3] poly=2*y1\nu=[0,3] v=[1,2] poly=1\nu=[1,2] v=[0,3] poly=1\ntotal 3\n");
  const auto copro0 = run_cli("coproduct -n 2 \"s0\" --eval0 --no-cache");
  CHECK(copro0.out == "u=[0,3] v=[1,2] poly=1\nu=[1,2] v=[0,3] poly=1\ntotal 2\n");
}

TEST_CASE("help is available") {
  CHECK(run_cli("--help").exit_code == 0);
  const auto r = run_cli("--help");
  CHECK(r.out.find("AFFLAG_CACHE_DIR") != std::string::npos);
}
