/******************************************************************************
 * Copyright 2026 The wfac Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

// End-to-end checks of the installed command-line binary. The test driver
// receives the binary location through the WFAC_CLI_PATH compile
// definition and talks to it exactly like a shell user would.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;
using Catch::Matchers::WithinAbs;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args,
                  const std::string& redirect = "2>&1") {
  const std::string cmd =
      std::string("\"") + WFAC_CLI_PATH + "\" " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, got);
  }
  const int raw = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.output = out;
  return r;
}

// Extracts the numeric payload of a "key value" line.
double value_of(const std::string& output, const std::string& key) {
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) {
      return std::strtod(line.c_str() + key.size() + 1, nullptr);
    }
  }
  FAIL("no line starting with '" << key << "' in:\n" << output);
  return 0.0;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("wfac_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ".txt");
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("constant subcommand reports value and diagnostics") {
  const auto r = run_cli("constant --n 1 --alpha 1");
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(value_of(r.output, "value"), WithinAbs(0.5, 1e-11));
  CHECK_THAT(value_of(r.output, "maximizing_radius"), WithinAbs(2.0, 1e-6));
  CHECK_THAT(r.output, ContainsSubstring("method ray_maximization"));
  CHECK(value_of(r.output, "residual") <= 1e-9);
}

TEST_CASE("constant subcommand handles the closed-form order") {
  const auto r = run_cli("constant --n 0 --alpha 0.5");
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(value_of(r.output, "value"),
             WithinAbs(0.80474234254941181, 1e-11));
  CHECK_THAT(r.output, ContainsSubstring("method closed_form"));
}

TEST_CASE("gamma subcommand") {
  const auto r = run_cli("gamma --p 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output == "0.5\n");
  CHECK(run_cli("gamma --p 0").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("constant --n 0 --alpha 0").exit_code == 2);  // inadmissible
  CHECK(run_cli("constant --n 1").exit_code == 2);            // missing flag
  CHECK(run_cli("--frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("fig1 --grid 1:2").exit_code == 2);
  CHECK(run_cli("verify no-such-suite").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("constant"));
  CHECK_THAT(r.output, ContainsSubstring("verify"));
}

TEST_CASE("fig1 output is deterministic CSV") {
  const auto once = run_cli("fig1 --grid 0.5:2:0.5");
  const auto twice = run_cli("fig1 --grid 0.5:2:0.5");
  REQUIRE(once.exit_code == 0);
  CHECK(once.output == twice.output);
  CHECK_THAT(once.output, StartsWith("# columns: p,gamma\n"));
  CHECK_THAT(once.output, ContainsSubstring("\n1,1\n"));
  CHECK_THAT(once.output, ContainsSubstring("\n2,0.5\n"));
}

TEST_CASE("fig3 emits the continuous extension at alpha = 1") {
  const auto r = run_cli("fig3 --grid 0.2:1:0.2");
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(r.output, StartsWith("# columns: alpha,C0,r_alpha,upper_bound\n"));
  CHECK_THAT(r.output, ContainsSubstring("\n1,1,1,1\n"));
}

TEST_CASE("det-bound reads a spectrum file") {
  const TempFile spectrum("# singular values\n0.5\n0.25   # tail\n\n");
  const auto r = run_cli("det-bound --p 1 " + spectrum.path());
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(value_of(r.output, "log_bound"), WithinAbs(0.75, 1e-12));
  CHECK_THAT(value_of(r.output, "bound"),
             WithinAbs(2.1170000166126748, 1e-11));
}

TEST_CASE("det-bound reports overflow on the linear scale") {
  const TempFile spectrum("1000\n");
  const auto r = run_cli("det-bound --p 1 " + spectrum.path());
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(value_of(r.output, "log_bound"), WithinAbs(1000.0, 1e-9));
  CHECK_THAT(r.output, ContainsSubstring("bound overflow"));
}

TEST_CASE("input errors exit with code 3") {
  CHECK(run_cli("det-bound --p 1 /nonexistent/spectrum.txt").exit_code == 3);

  const TempFile negative("0.5\n-1\n");
  CHECK(run_cli("det-bound --p 1 " + negative.path()).exit_code == 3);

  const TempFile malformed("0.5\nnot-a-number\n");
  const auto r = run_cli("det-bound --p 1 " + malformed.path());
  CHECK(r.exit_code == 3);
  CHECK_THAT(r.output, ContainsSubstring(":2:"));  // path:line diagnostics
}

TEST_CASE("eigencount-bound computes and warns about R_p") {
  const TempFile numbers("1\n");
  const std::string args =
      "eigencount-bound --p 2 --r-p 1 --norm-a 0 --s 2 " + numbers.path();

  const auto quiet = run_cli(args, "2>/dev/null");
  REQUIRE(quiet.exit_code == 0);
  CHECK(quiet.output == "0.125\n");

  const auto loud = run_cli(args);
  CHECK_THAT(loud.output, ContainsSubstring("warning:"));
  CHECK_THAT(loud.output, ContainsSubstring("R_p = 1"));

  CHECK(run_cli("eigencount-bound --p 2 --r-p 1 --norm-a 3 --s 2 " +
                numbers.path())
            .exit_code == 2);  // s <= ||A||
}

TEST_CASE("verify runs a suite and reports per-check lines") {
  const auto r = run_cli("verify thm2");
  REQUIRE(r.exit_code == 0);
  REQUIRE_FALSE(r.output.empty());
  std::istringstream in(r.output);
  std::string line;
  int checks = 0;
  while (std::getline(in, line)) {
    CHECK_THAT(line, StartsWith("PASS "));
    ++checks;
  }
  CHECK(checks >= 3);
}
