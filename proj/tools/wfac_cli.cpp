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

// wfac: growth constants of Weierstrass primary factors.
//
// Subcommands
//   constant          one C_{n,alpha} with solver diagnostics
//   gamma             one Gamma_p value
//   fig1              CSV table p -> Gamma_p
//   fig2              CSV table (n, alpha) -> C_{n,alpha}
//   fig3              CSV table alpha -> C_{0,alpha} with bound
//   det-bound         regularized-determinant bound from a spectrum file
//   eigencount-bound  eigenvalue-count bound from a spectrum file
//   verify            run a named self-check suite
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
// error (unreadable or malformed data file).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wfac/wfac.hpp"

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One nonnegative decimal per line; '#' starts a comment; blank lines
// ignored.
std::vector<double> read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::vector<double> values;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string field = line.substr(begin, end - begin + 1);

    char* parse_end = nullptr;
    const double v = std::strtod(field.c_str(), &parse_end);
    if (parse_end != field.c_str() + field.size()) {
      throw InputError(path + ":" + std::to_string(lineno) +
                       ": malformed number '" + field + "'");
    }
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InputError(path + ":" + std::to_string(lineno) +
                       ": entries must be finite and non-negative");
    }
    values.push_back(v);
  }
  return values;
}

void print_constant(const wfac::ConstantResult& r) {
  std::printf("value %s\n", wfac::format_number(r.value).c_str());
  std::printf("maximizing_radius %s\n",
              wfac::format_number(r.maximizing_radius).c_str());
  std::printf("method %s\n", wfac::to_string(r.method));
  std::printf("residual %s\n", wfac::format_number(r.residual).c_str());
}

int run_verify(const std::string& suite) {
  const std::vector<wfac::verify::Check> checks =
      wfac::verify::run_suite(suite);
  for (const auto& c : checks) {
    std::printf("%s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : ": ", c.detail.c_str());
  }
  return wfac::verify::all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth constants of Weierstrass primary factors"};
  app.require_subcommand(1);

  int exit_code = 0;

  // constant
  int c_n = 0;
  double c_alpha = 1.0;
  auto* cmd_constant =
      app.add_subcommand("constant", "compute one constant C_{n,alpha}");
  cmd_constant->add_option("--n", c_n, "factor order n >= 0")->required();
  cmd_constant->add_option("--alpha", c_alpha, "exponent alpha")->required();
  cmd_constant->callback(
      [&] { print_constant(wfac::c_n_alpha(c_n, c_alpha)); });

  // gamma
  double g_p = 1.0;
  auto* cmd_gamma = app.add_subcommand("gamma", "compute one Gamma_p");
  cmd_gamma->add_option("--p", g_p, "exponent p > 0")->required();
  cmd_gamma->callback([&] {
    std::printf("%s\n", wfac::format_number(wfac::gamma_p(g_p)).c_str());
  });

  // fig1
  std::string f1_grid = "0.05:8:0.05";
  auto* cmd_fig1 =
      app.add_subcommand("fig1", "CSV table of p -> Gamma_p");
  cmd_fig1->add_option("--grid", f1_grid, "p grid start:stop:step");
  cmd_fig1->callback([&] {
    std::fputs(wfac::fig1_table(wfac::parse_grid(f1_grid)).c_str(), stdout);
  });

  // fig2
  std::vector<int> f2_n = {1, 2, 3, 4, 5, 6, 7, 8};
  std::string f2_grid = "0:1:0.01";
  auto* cmd_fig2 =
      app.add_subcommand("fig2", "CSV table of (n, alpha) -> C_{n,alpha}");
  cmd_fig2->add_option("--n-list", f2_n, "factor orders (n >= 1)");
  cmd_fig2->add_option("--grid", f2_grid, "alpha grid start:stop:step");
  cmd_fig2->callback([&] {
    std::fputs(wfac::fig2_table(f2_n, wfac::parse_grid(f2_grid)).c_str(),
               stdout);
  });

  // fig3
  std::string f3_grid = "0.01:1:0.01";
  auto* cmd_fig3 =
      app.add_subcommand("fig3", "CSV table of alpha -> C_{0,alpha}");
  cmd_fig3->add_option("--grid", f3_grid, "alpha grid start:stop:step");
  cmd_fig3->callback([&] {
    std::fputs(wfac::fig3_table(wfac::parse_grid(f3_grid)).c_str(), stdout);
  });

  // det-bound
  double db_p = 1.0;
  std::string db_file;
  auto* cmd_det = app.add_subcommand(
      "det-bound", "determinant bound exp(Gamma_p sum s_k^p) from a file");
  cmd_det->add_option("--p", db_p, "Schatten exponent p > 0")->required();
  cmd_det->add_option("file", db_file, "spectrum file, one value per line")
      ->required();
  cmd_det->callback([&] {
    const wfac::DetBound b =
        wfac::det_bound(db_p, wfac::SpectrumSample(read_spectrum_file(db_file)));
    std::printf("log_bound %s\n", wfac::format_number(b.log_bound).c_str());
    if (b.bound) {
      std::printf("bound %s\n", wfac::format_number(*b.bound).c_str());
    } else {
      std::printf("bound overflow\n");
    }
  });

  // eigencount-bound
  wfac::EigencountInput ec;
  std::string ec_file;
  auto* cmd_eig = app.add_subcommand(
      "eigencount-bound",
      "bound on the eigenvalue count outside |z| = s for B = A + K");
  cmd_eig->add_option("--p", ec.p, "Schatten exponent p > 0")->required();
  cmd_eig->add_option("--r-p", ec.r_p, "domain constant R_p > 0")->required();
  cmd_eig->add_option("--norm-a", ec.norm_a, "operator norm ||A||")
      ->required();
  cmd_eig->add_option("--s", ec.s, "radius s > ||A||")->required();
  cmd_eig->add_option("file", ec_file, "approximation numbers of B - A")
      ->required();
  cmd_eig->callback([&] {
    ec.approx_numbers = wfac::SpectrumSample(read_spectrum_file(ec_file));
    std::fprintf(stderr,
                 "warning: the bound scales linearly in R_p = %s, which is "
                 "taken from user input, not computed\n",
                 wfac::format_number(ec.r_p).c_str());
    std::printf("%s\n",
                wfac::format_number(wfac::eigencount_bound(ec)).c_str());
  });

  // verify
  std::string v_suite;
  auto* cmd_verify = app.add_subcommand("verify", "run a self-check suite");
  cmd_verify
      ->add_option("suite", v_suite,
                   "one of: prop1, thm1, thm2, corollaries, oracle")
      ->required();
  cmd_verify->callback([&] { exit_code = run_verify(v_suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help requests exit 0, parse errors exit 2
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
