// Copyright 2026 The maxaffine Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end runs of the command-line binary. The binary path arrives in
// MAXAFFINE_CLI_BIN (set by the test harness); stderr is folded into the
// captured output so error messages can be asserted on.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string CliBinary() {
  const char* path = std::getenv("MAXAFFINE_CLI_BIN");
  return path == nullptr ? "./maxaffine" : path;
}

RunResult Run(const std::string& args) {
  std::string command = "'" + CliBinary() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  int raw = pclose(pipe);
  int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, output};
}

std::string TempPath(const char* name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir == nullptr ? "/tmp" : dir) + "/" + name;
}

}  // namespace

TEST_CASE("cli: cantor-build prints measures and emits json") {
  auto run = Run("cantor-build --schedule ternary --depth 2");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("\"truncation_measure\":[4,9]") != std::string::npos);
  CHECK(run.output.find("lambda(C) = 0") != std::string::npos);

  auto geo = Run("cantor-build --schedule geometric --c 1/2 --k 1/4 --depth 3");
  CHECK(geo.exit_code == 0);
  CHECK(geo.output.find("lambda(C) = 5/6") != std::string::npos);
  CHECK(geo.output.find("tail = 1/384") != std::string::npos);

  std::string out = TempPath("maf_cli_cantor.json");
  auto to_file = Run("cantor-build --schedule geometric --c 1/2 --k 1/4 "
                     "--depth 3 --out '" + out + "'");
  CHECK(to_file.exit_code == 0);
  FILE* fp = std::fopen(out.c_str(), "rb");
  REQUIRE(fp != nullptr);
  std::fclose(fp);
  std::remove(out.c_str());
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(Run("").exit_code == 2);
  CHECK(Run("no-such-command").exit_code == 2);
  CHECK(Run("cantor-build --schedule ternary --depth 0").exit_code == 2);
  CHECK(Run("cantor-build --schedule ternary").exit_code == 2);  // no depth
  CHECK(Run("cantor-build --schedule geometric --depth 3").exit_code == 2);
  CHECK(Run("cantor-build --schedule geometric --c 0.5 --k 1/4 --depth 3")
            .exit_code == 2);
  CHECK(Run("cantor-build --schedule geometric --c 1/2 --k 1/2 --depth 3")
            .exit_code == 2);
  CHECK(Run("cantor-build --schedule ternary --c 1/2 --depth 3").exit_code ==
        2);
  CHECK(Run("tent-example --n 30").exit_code == 2);
  CHECK(Run("tent-example --n 1").exit_code == 2);
  CHECK(Run("verify-failure --slopes 1/2 --grid-step 1/4").exit_code == 2);
  CHECK(Run("--help").exit_code == 0);
}

TEST_CASE("cli: verify-lemma certifies and reports per ratio") {
  auto run = Run("verify-lemma --c 1/2 --grid-step 1/8");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("\"all_certified\":true") != std::string::npos);

  auto multi = Run("verify-lemma --c 3/10,1/2 --grid-step 1/16");
  CHECK(multi.exit_code == 0);

  CHECK(Run("verify-lemma --c").exit_code == 2);
}

TEST_CASE("cli: verify-failure certifies, with reports byte-identical") {
  std::string out_a = TempPath("maf_cli_falsify_a.json");
  std::string out_b = TempPath("maf_cli_falsify_b.json");
  auto first = Run("verify-failure --c 1/2 --grid-step 1/8 --slopes 1 --out '" +
                   out_a + "'");
  CHECK(first.exit_code == 0);
  auto second = Run("verify-failure --c 1/2 --grid-step 1/8 --slopes 1 --out '" +
                    out_b + "'");
  CHECK(second.exit_code == 0);

  auto slurp = [](const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "rb");
    REQUIRE(fp != nullptr);
    std::string content;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), fp)) > 0) {
      content.append(buffer.data(), got);
    }
    std::fclose(fp);
    return content;
  };
  std::string report = slurp(out_a);
  CHECK(report == slurp(out_b));
  CHECK(report.find("\"status\":\"certified\"") != std::string::npos);

  // The report subcommand renders the same document.
  auto csv = Run("report --in '" + out_a + "' --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("a,b,slope,margin_lo,status,depth\n", 0) == 0);
  auto summary = Run("report --in '" + out_a + "' --format json");
  CHECK(summary.exit_code == 0);
  CHECK(summary.output.find("\"all_certified\":true") != std::string::npos);

  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  CHECK(Run("report --in '" + out_a + "' --format csv").exit_code == 1);
}

TEST_CASE("cli: aap-approx is seeded and deterministic") {
  auto a = Run("aap-approx --seed 9 --count 5 --eps 1/10");
  auto b = Run("aap-approx --seed 9 --count 5 --eps 1/10");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"seed\":9") != std::string::npos);

  auto c = Run("aap-approx --seed 10 --count 5 --eps 1/10");
  CHECK(c.output != a.output);
}

TEST_CASE("cli: tent-example reports and writes plot data") {
  std::string csv = TempPath("maf_cli_tent.csv");
  auto run = Run("tent-example --n 8 --out '" + csv + "'");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("\"witnesses_found\":160") != std::string::npos);
  FILE* fp = std::fopen(csv.c_str(), "rb");
  REQUIRE(fp != nullptr);
  std::fclose(fp);
  std::remove(csv.c_str());
}
