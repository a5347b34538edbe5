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

// Brute-force cross-checks. grid_sup maximizes the scaled objective
// g(z) = ln|E_n(z)| / |z|^{n+alpha} over a dense polar grid of the plane,
// entirely independent of the ray reduction used by the fast path; it can
// only undershoot the true supremum. series_log_abs_en evaluates the tail
// series with an explicit truncation count and returns a rigorous bound on
// the omitted remainder, giving an interval that must contain the fast
// evaluator's answer.

#ifndef WFAC_GRID_ORACLE_HPP
#define WFAC_GRID_ORACLE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "wfac/primary_factor.hpp"

namespace wfac {

struct GridSupSpec {
  double r_max = 0.0;
  int radial_steps = 0;
  int angular_steps = 0;
};

// Default resolution: log-spaced radii in [0.01, 10 (1 + 1/n)], which
// safely covers every attaining radius for n >= 1.
inline GridSupSpec default_grid_spec(int n) {
  if (n < 1) {
    throw std::domain_error("default_grid_spec: requires n >= 1");
  }
  return {10.0 * (1.0 + 1.0 / n), 4000, 720};
}

struct GridSupReport {
  double value = -std::numeric_limits<double>::infinity();
  double r_at_max = 0.0;
  double theta_at_max = 0.0;
};

inline GridSupReport grid_sup_report(int n, double alpha,
                                     const GridSupSpec& spec) {
  if (n < 1) {
    throw std::domain_error("grid_sup_report: requires n >= 1");
  }
  if (!admissible_exponent(n, alpha)) {
    throw std::domain_error("grid_sup_report: inadmissible exponent pair");
  }
  if (!std::isfinite(spec.r_max) || !(spec.r_max > 1.0 + 1.0 / n)) {
    throw std::domain_error(
        "grid_sup_report: r_max must exceed 1 + 1/n to cover the maximizer");
  }
  if (spec.radial_steps < 2 || spec.angular_steps < 8) {
    throw std::domain_error("grid_sup_report: grid too coarse");
  }

  const double r_lo = 0.01;
  const double log_lo = std::log(r_lo);
  const double log_ratio = std::log(spec.r_max / r_lo);
  const double dtheta = 2.0 * kPi / spec.angular_steps;

  GridSupReport best;
  for (int i = 0; i < spec.radial_steps; ++i) {
    const double r =
        std::exp(log_lo + log_ratio * i / (spec.radial_steps - 1));
    const bool near_unit = std::abs(r - 1.0) < 1e-9;
    for (int j = 0; j < spec.angular_steps; ++j) {
      const double theta = j * dtheta;
      const std::complex<double> z = std::polar(r, theta);
      if (near_unit && std::abs(z - std::complex<double>(1.0, 0.0)) < 1e-9) {
        continue;  // the objective is -inf at z = 1
      }
      const double v = g_value(n, alpha, z);
      if (v > best.value) {
        best.value = v;
        best.r_at_max = r;
        best.theta_at_max = theta;
      }
    }
  }
  return best;
}

inline double grid_sup(int n, double alpha, const GridSupSpec& spec) {
  return grid_sup_report(n, alpha, spec).value;
}

struct SeriesEnclosure {
  double value = 0.0;       // truncated tail series
  double tail_bound = 0.0;  // rigorous bound on |omitted remainder|
};

// ln|E_n(z)| = -sum_{k=n+1}^{n+terms} Re(z^k)/k + remainder, |z| < 1,
// |remainder| <= r^{K+1} / ((K+1)(1-r)) with K = n + terms.
inline SeriesEnclosure series_log_abs_en(int n, std::complex<double> z,
                                         long terms) {
  if (n < 0) {
    throw std::domain_error("series_log_abs_en: requires n >= 0");
  }
  if (terms < 1) {
    throw std::domain_error("series_log_abs_en: requires terms >= 1");
  }
  const double r = std::abs(z);
  if (!(r < 1.0)) {
    throw std::domain_error("series_log_abs_en: requires |z| < 1");
  }

  std::complex<double> zk = 1.0;
  for (int k = 0; k < n; ++k) zk *= z;
  double sum = 0.0;
  double comp = 0.0;
  for (long m = 1; m <= terms; ++m) {
    zk *= z;
    detail::kahan_add(sum, comp, -zk.real() / static_cast<double>(n + m));
  }
  const long kk = n + terms;
  const double tail =
      r == 0.0 ? 0.0
               : std::exp((kk + 1) * std::log(r)) / ((kk + 1) * (1.0 - r));
  return {sum, tail};
}

}  // namespace wfac

#endif  // WFAC_GRID_ORACLE_HPP
