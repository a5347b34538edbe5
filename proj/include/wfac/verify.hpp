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

// Self-contained verification suites, grouped by the mathematical facts
// they exercise:
//
//   prop1       ray maximality of ln|E_n| on circles of radius >= 1+1/n,
//               and monotonicity of the circle maximum of g below that
//   thm1        behavior of C_{n,alpha} in n: monotonicity at the alpha
//               endpoints, the sequence g_n, and the n -> inf limit
//   thm2        the closed form for C_{0,alpha} against direct maximization
//   corollaries monotonicity/convexity in alpha and the closed-form upper
//               estimates
//   oracle      brute-force grid suprema and series enclosures against the
//               fast evaluators
//
// Each check yields a pass flag plus a one-line numeric summary; the CLI
// prints them and exits nonzero if anything failed.

#ifndef WFAC_VERIFY_HPP
#define WFAC_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wfac/bounds.hpp"
#include "wfac/constants.hpp"
#include "wfac/grid_oracle.hpp"
#include "wfac/primary_factor.hpp"
#include "wfac/tables.hpp"

namespace wfac::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::string fmt(const char* pattern, double a, double b = 0.0,
                       double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// max over r > 0 of ln(1+r)/r^alpha, maximized as log(objective) over the
// log-radius t = ln r so that the enormous maximizer radii of small alpha
// stay reachable.
inline double c0_direct_max(double alpha) {
  auto q = [alpha](double t) {
    return std::log(std::log1p(std::exp(t))) - alpha * t;
  };
  const SolverReport rep = maximize_bracketed(q, {-8.0, 400.0}, 1e-12);
  return std::exp(rep.value);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// prop1: the maximum of ln|E_n| over |z| = r sits on the positive real
// axis once r >= 1 + 1/n, and the circle maximum of g is nondecreasing
// in r below that radius.
inline std::vector<Check> prop1() {
  std::vector<Check> out;

  {
    double worst = 0.0;
    for (const int n : {1, 2, 3, 5}) {
      for (const double r : {1.0 + 1.0 / n, 2.0, 3.0, 5.0}) {
        const CircleMax cm = circle_max(n, r, 720);
        const double on_axis = log_abs_en(n, {r, 0.0});
        worst = std::max(worst, std::abs(cm.value - on_axis));
      }
    }
    out.push_back({"circle max attained on positive axis for r >= 1+1/n",
                   worst <= 1e-8, detail::fmt("max |deviation| = %.3g", worst)});
  }

  {
    bool ok = true;
    double worst_drop = 0.0;
    for (const int n : {1, 2, 3}) {
      for (const double alpha : {0.0, 0.5, 1.0}) {
        const double r_hi = 1.0 + 1.0 / n;
        double prev = -std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 12; ++i) {
          const double r = r_hi * i / 12.0;
          const double m =
              circle_max(n, r, 720).value / std::pow(r, n + alpha);
          if (m < prev - 1e-9) {
            ok = false;
            worst_drop = std::max(worst_drop, prev - m);
          }
          prev = m;
        }
      }
    }
    out.push_back({"circle max of g nondecreasing in r on (0, 1+1/n]", ok,
                   detail::fmt("worst drop = %.3g", worst_drop)});
  }

  {
    const GridSupSpec spec{8.0, 600, 180};
    const GridSupReport rep = grid_sup_report(2, 0.5, spec);
    const double cell = 2.0 * kPi / spec.angular_steps;
    const double dist =
        std::min(rep.theta_at_max, 2.0 * kPi - rep.theta_at_max);
    out.push_back({"grid argmax lies on the positive axis", dist <= cell,
                   detail::fmt("theta = %.3g (cell %.3g)", dist, cell)});
  }

  return out;
}

// ---------------------------------------------------------------------------
// thm1: monotonicity of C_{n,1} and C_{n,0} in n, the sequence g_n, and
// the common n -> inf limit.
inline std::vector<Check> thm1() {
  std::vector<Check> out;
  const double limit = limit_constant();

  std::vector<double> c1(31), c0(31), g(31);
  for (int n = 1; n <= 30; ++n) {
    c1[n] = c_n_alpha(n, 1.0).value;
    c0[n] = c_n_alpha(n, 0.0).value;
    g[n] = g_seq(n);
  }

  {
    bool ok = true;
    for (int n = 2; n <= 30; ++n) ok = ok && c1[n] >= c1[n - 1] - 1e-9;
    out.push_back({"C_{n,1} nondecreasing for n = 1..30", ok,
                   detail::fmt("C_{1,1} = %.12g, C_{30,1} = %.12g", c1[1],
                               c1[30])});
  }
  {
    bool ok = true;
    for (int n = 2; n <= 30; ++n) ok = ok && c0[n] <= c0[n - 1] + 1e-9;
    out.push_back({"C_{n,0} nonincreasing for n = 1..30", ok,
                   detail::fmt("C_{1,0} = %.12g, C_{30,0} = %.12g", c0[1],
                               c0[30])});
  }
  {
    bool ok = true;
    for (int n = 1; n <= 30; ++n) {
      ok = ok && g[n] > 0.0 && g[n] <= 1.0 + 1e-12;
      if (n > 1) ok = ok && g[n] <= g[n - 1] + 1e-9;
    }
    out.push_back({"g_n in (0,1] and nonincreasing for n = 1..30", ok,
                   detail::fmt("g_1 = %.12g, g_30 = %.12g", g[1], g[30])});
  }
  {
    bool ok = true;
    for (int n = 1; n <= 30; ++n) ok = ok && g[n] <= marchetti_h(n) + 1e-12;
    out.push_back({"g_n <= h_n for n = 1..30", ok,
                   detail::fmt("g_30 = %.6g <= h_30 = %.6g", g[30],
                               marchetti_h(30))});
  }
  {
    const bool ok = limit >= 0.7418 && limit <= 0.7428;
    out.push_back({"limit constant in [0.7418, 0.7428]", ok,
                   detail::fmt("value = %.12g", limit)});
  }
  {
    double worst = 0.0;
    for (const double alpha : {0.0, 0.5, 1.0}) {
      worst = std::max(worst,
                       std::abs(c_n_alpha(200, alpha).value - limit));
    }
    out.push_back({"|C_{200,alpha} - limit| <= 0.01 for alpha in {0,.5,1}",
                   worst <= 0.01, detail::fmt("max gap = %.3g", worst)});
  }
  {
    bool ok = true;
    for (int n = 1; n <= 30; ++n) ok = ok && c1[n] <= limit + 1e-9;
    out.push_back({"C_{n,1} <= limit for n = 1..30", ok,
                   detail::fmt("C_{30,1} = %.12g vs %.12g", c1[30], limit)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// thm2: the Lambert W closed form for C_{0,alpha}.
inline std::vector<Check> thm2() {
  std::vector<Check> out;

  {
    const ConstantResult r = c_0_alpha(1.0);
    const bool ok = std::abs(r.value - 1.0) <= 1e-12 &&
                    r.method == ConstantMethod::limit_definition &&
                    r.maximizing_radius == 0.0;
    out.push_back({"C_{0,1} = 1, attained only in the limit", ok,
                   detail::fmt("value = %.12g", r.value)});
  }
  {
    double worst = 0.0;
    for (int i = 1; i <= 49; ++i) {
      const double alpha = 0.02 * i;
      worst = std::max(worst, std::abs(c_0_alpha(alpha).value -
                                       detail::c0_direct_max(alpha)));
    }
    out.push_back({"closed form matches direct maximization on (0,1)",
                   worst <= 1e-9, detail::fmt("max |gap| = %.3g", worst)});
  }
  {
    bool ok = true;
    for (int i = 1; i <= 99; ++i) {
      const double alpha = 0.01 * i;
      if (alpha >= 1.0) break;
      const double ra = r_alpha(alpha);
      ok = ok && ra > 0.0 && ra < alpha;
    }
    out.push_back({"r_alpha lies in (0, alpha)", ok, ""});
  }
  {
    double worst = 0.0;
    for (const double alpha : {0.2, 0.4, 0.6, 0.8}) {
      const ConstantResult c = c_0_alpha(alpha);
      const double R = c.maximizing_radius;
      const double direct = std::log1p(R) / std::pow(R, alpha);
      worst = std::max(worst, std::abs(c.value - direct));
    }
    out.push_back({"value attained at the reported maximizing radius",
                   worst <= 1e-10, detail::fmt("max |gap| = %.3g", worst)});
  }
  {
    const double a1 = 0.001 * c_0_alpha(0.001).value;
    const double a2 = 0.01 * c_0_alpha(0.01).value;
    const bool ok = std::abs(a1 / kInvE - 1.0) <= 0.01 &&
                    std::abs(a2 / kInvE - 1.0) <= 0.02;
    out.push_back({"alpha * C_{0,alpha} -> 1/e as alpha -> 0", ok,
                   detail::fmt("alpha=0.001: %.8g (1/e = %.8g)", a1, kInvE)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// corollaries: behavior in alpha at fixed n, plus all closed-form upper
// estimates.
inline std::vector<Check> corollaries() {
  std::vector<Check> out;

  // One sweep of the full (n, alpha) grid used by several checks below.
  constexpr int kAlphaSteps = 50;  // alpha = 0, 0.02, ..., 1
  std::vector<std::vector<double>> c(13);
  for (int n = 1; n <= 12; ++n) {
    c[n].resize(kAlphaSteps + 1);
    for (int i = 0; i <= kAlphaSteps; ++i) {
      c[n][i] = c_n_alpha(n, static_cast<double>(i) / kAlphaSteps).value;
    }
  }

  {
    bool ok = true;
    for (int n = 1; n <= 12; ++n) {
      for (int i = 1; i <= kAlphaSteps; ++i) {
        ok = ok && c[n][i] <= c[n][i - 1] + 1e-9;
      }
    }
    out.push_back({"alpha -> C_{n,alpha} nonincreasing (n = 1..12)", ok, ""});
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
      for (int i = 1; i < kAlphaSteps; ++i) {
        const double second = c[n][i + 1] - 2.0 * c[n][i] + c[n][i - 1];
        worst = std::min(worst, second);
      }
    }
    out.push_back({"alpha -> C_{n,alpha} convex (second differences)",
                   worst >= -1e-8,
                   detail::fmt("min second difference = %.3g", worst)});
  }
  {
    bool ok = true;
    for (int n = 1; n <= 12; ++n) {
      for (int i = 0; i <= kAlphaSteps; ++i) {
        const double alpha = static_cast<double>(i) / kAlphaSteps;
        const double chord = (1.0 - alpha) * c[n][0] + alpha * c[n][kAlphaSteps];
        ok = ok && c[n][kAlphaSteps] <= c[n][i] + 1e-9 &&
             c[n][i] <= chord + 1e-9;
      }
    }
    out.push_back({"sandwich C_{n,1} <= C_{n,alpha} <= chord", ok, ""});
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kAlphaSteps; ++i) {
      const double alpha = static_cast<double>(i) / kAlphaSteps;
      worst = std::max(worst, c[1][i] - c1_upper(alpha));
    }
    out.push_back({"n = 1 estimate dominates C_{1,alpha}", worst <= 1e-9,
                   detail::fmt("max excess = %.3g", worst)});
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    bool below_one = true;
    for (int n = 2; n <= 12; ++n) {
      for (int i = 0; i <= kAlphaSteps; ++i) {
        const double alpha = static_cast<double>(i) / kAlphaSteps;
        const double ub = cn_upper(n, alpha);
        worst = std::max(worst, c[n][i] - ub);
        below_one = below_one && ub <= 1.0 + 1e-12;
      }
    }
    out.push_back({"n >= 2 estimate dominates C_{n,alpha} and stays <= 1",
                   worst <= 1e-9 && below_one,
                   detail::fmt("max excess = %.3g", worst)});
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 50; ++i) {
      const double alpha = 0.02 * i;
      worst = std::max(worst,
                       c_0_alpha(std::min(alpha, 1.0)).value -
                           c0_upper(std::min(alpha, 1.0)));
    }
    out.push_back({"n = 0 estimate dominates C_{0,alpha}", worst <= 1e-12,
                   detail::fmt("max excess = %.3g", worst)});
  }
  {
    double worst = 0.0;
    for (const int n : {1, 2, 5, 12}) {
      for (const double alpha : {0.0, 0.3, 1.0}) {
        const ConstantResult r = c_n_alpha(n, alpha);
        worst = std::max(worst, r.residual);
      }
    }
    out.push_back({"ray argmax satisfies first-order optimality", worst <=
                   kOptimalityTolerance,
                   detail::fmt("max residual = %.3g", worst)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// oracle: brute-force grid suprema and tail-series enclosures.
inline std::vector<Check> oracle() {
  std::vector<Check> out;

  {
    bool below = true;
    bool close = true;
    double worst_over = -std::numeric_limits<double>::infinity();
    double worst_under = 0.0;
    bool on_axis = true;
    for (int n = 1; n <= 5; ++n) {
      const GridSupSpec spec = default_grid_spec(n);
      for (const double alpha : {0.0, 0.5, 1.0}) {
        const double cval = c_n_alpha(n, alpha).value;
        const GridSupReport rep = grid_sup_report(n, alpha, spec);
        worst_over = std::max(worst_over, rep.value - cval);
        worst_under = std::max(worst_under, cval - rep.value);
        below = below && rep.value <= cval + 1e-9;
        close = close && rep.value >= cval - 5e-3;
        if (rep.r_at_max >= 1.0 + 1.0 / n) {
          const double cell = 2.0 * kPi / spec.angular_steps;
          const double dist = std::min(rep.theta_at_max,
                                       2.0 * kPi - rep.theta_at_max);
          on_axis = on_axis && dist <= cell;
        }
      }
    }
    out.push_back({"grid supremum never exceeds C_{n,alpha}", below,
                   detail::fmt("max excess = %.3g", worst_over)});
    out.push_back({"grid supremum within 5e-3 of C_{n,alpha} (n <= 5)", close,
                   detail::fmt("max deficiency = %.3g", worst_under)});
    out.push_back({"grid argmax within one angular cell of the axis",
                   on_axis, ""});
  }
  {
    const double coarse = grid_sup(2, 0.5, {15.0, 2000, 360});
    const double fine = grid_sup(2, 0.5, {15.0, 4000, 720});
    out.push_back({"grid refinement is nondecreasing", coarse <= fine + 1e-12,
                   detail::fmt("coarse = %.12g, fine = %.12g", coarse, fine)});
  }
  {
    const std::complex<double> z{0.0, 0.5};
    const SeriesEnclosure e = series_log_abs_en(1, z, 200);
    const double v = log_abs_en(1, z);
    const bool ok = v >= e.value - e.tail_bound - 1e-15 &&
                    v <= e.value + e.tail_bound + 1e-15;
    out.push_back({"series enclosure contains ln|E_1(0.5i)|", ok,
                   detail::fmt("value = %.12g, tail = %.3g", e.value,
                               e.tail_bound)});
  }
  {
    const std::complex<double> z = std::polar(0.99, 2.0);
    const SeriesEnclosure e = series_log_abs_en(3, z, 100000);
    const double v = log_abs_en_direct(3, z);
    const bool ok = e.tail_bound < 1e-10 &&
                    std::abs(v - e.value) <= e.tail_bound + 1e-12;
    out.push_back({"slow-convergence enclosure matches the direct branch", ok,
                   detail::fmt("gap = %.3g, tail = %.3g",
                               std::abs(v - e.value), e.tail_bound)});
  }
  {
    const SeriesEnclosure e = series_log_abs_en(0, {0.3, 0.0}, 300);
    const double target = std::log(0.7);
    const bool ok = std::abs(e.value - target) <= e.tail_bound + 1e-15;
    out.push_back({"n = 0 series reproduces ln(1 - r)", ok,
                   detail::fmt("gap = %.3g", std::abs(e.value - target))});
  }
  return out;
}

inline std::vector<Check> run_suite(std::string_view name) {
  if (name == "prop1") return prop1();
  if (name == "thm1") return thm1();
  if (name == "thm2") return thm2();
  if (name == "corollaries") return corollaries();
  if (name == "oracle") return oracle();
  throw std::invalid_argument("unknown verify suite '" + std::string(name) +
                              "'");
}

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

}  // namespace wfac::verify

#endif  // WFAC_VERIFY_HPP
