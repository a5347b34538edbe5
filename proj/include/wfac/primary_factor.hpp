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

// Weierstrass primary factors
//
//   E_0(z) = 1 - z,
//   E_n(z) = (1 - z) exp( sum_{k=1}^{n} z^k / k ),   n >= 1,
//
// and numerically careful evaluation of ln|E_n(z)|. Since
// ln(1 - z) = -sum_{k>=1} z^k/k for |z| < 1, the partial sum in the
// exponent cancels the first n terms and
//
//   ln|E_n(z)| = -sum_{k>n} Re(z^k)/k            (|z| < 1).
//
// Inside the disc the truncated tail series avoids the catastrophic
// cancellation the direct form ln|1-z| + sum Re(z^k)/k suffers for small
// |z|; outside we use the direct form.

#ifndef WFAC_PRIMARY_FACTOR_HPP
#define WFAC_PRIMARY_FACTOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "wfac/special_functions.hpp"

namespace wfac {

// Switchover radius between tail-series and direct evaluation of ln|E_n|.
inline constexpr double kSeriesRadius = 0.5;
// The tail series stops once the geometric bound on the omitted remainder
// drops below this.
inline constexpr double kSeriesTailCut = 1e-17;

namespace detail {

inline void require_order(int n, const char* who) {
  if (n < 0) {
    throw std::domain_error(std::string(who) + ": requires n >= 0");
  }
}

inline void require_finite(std::complex<double> z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error(std::string(who) + ": non-finite argument");
  }
}

}  // namespace detail

// True when (n, alpha) is an admissible exponent pair: alpha in [0, 1] for
// n >= 1, and alpha in (0, 1] for n = 0 (the n = 0, alpha = 0 constant
// diverges).
inline bool admissible_exponent(int n, double alpha) {
  if (n < 0 || !std::isfinite(alpha)) return false;
  if (n == 0) return alpha > 0.0 && alpha <= 1.0;
  return alpha >= 0.0 && alpha <= 1.0;
}

// E_n(z) itself. Throws std::range_error when the exponential overflows.
inline std::complex<double> eval_en(int n, std::complex<double> z) {
  detail::require_order(n, "eval_en");
  detail::require_finite(z, "eval_en");
  if (n == 0) {
    return 1.0 - z;
  }
  std::complex<double> s = 0.0;
  std::complex<double> zk = 1.0;
  for (int k = 1; k <= n; ++k) {
    zk *= z;
    s += zk / static_cast<double>(k);
  }
  if (!(s.real() < kLogDblMax)) {  // also catches NaN and +inf
    throw std::range_error("eval_en: exp overflow");
  }
  const std::complex<double> result = (1.0 - z) * std::exp(s);
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw std::range_error("eval_en: overflow");
  }
  return result;
}

// Tail series for ln|E_n(z)|, valid on |z| < 1:
//   -sum_{k=n+1}^{K} Re(z^k)/k,  remainder bounded by r^{K+1}/((K+1)(1-r)).
inline double log_abs_en_series(int n, std::complex<double> z) {
  detail::require_order(n, "log_abs_en_series");
  detail::require_finite(z, "log_abs_en_series");
  const double r = std::abs(z);
  if (!(r < 1.0)) {
    throw std::domain_error("log_abs_en_series: requires |z| < 1");
  }
  if (r == 0.0) return 0.0;

  std::complex<double> zk = 1.0;
  for (int k = 0; k < n; ++k) zk *= z;
  double rk = std::pow(r, n);
  // Truncate relative to the leading-term magnitude r^{n+1}/(n+1), not
  // just absolutely: deep inside the disc the whole value is that small,
  // and callers divide by |z|^{n+alpha}, which would amplify an absolute
  // cut. The denormal floor keeps the loop terminating when r^{n+1}
  // underflows.
  const double cut =
      std::min(kSeriesTailCut,
               std::max(1e-16 * rk * r / (n + 1),
                        std::numeric_limits<double>::min()));
  double sum = 0.0;
  double comp = 0.0;
  for (int k = n + 1;; ++k) {
    zk *= z;
    rk *= r;
    detail::kahan_add(sum, comp, -zk.real() / k);
    if (rk * r / ((k + 1) * (1.0 - r)) < cut) break;
  }
  return sum;
}

// Direct form ln|1 - z| + sum_{k=1}^n Re(z^k)/k. Returns -inf at z = 1;
// throws std::range_error if the partial sum overflows.
inline double log_abs_en_direct(int n, std::complex<double> z) {
  detail::require_order(n, "log_abs_en_direct");
  detail::require_finite(z, "log_abs_en_direct");
  double acc = std::log(std::abs(1.0 - z));
  if (n > 0) {
    std::complex<double> zk = 1.0;
    double s = 0.0;
    double comp = 0.0;
    for (int k = 1; k <= n; ++k) {
      zk *= z;
      detail::kahan_add(s, comp, zk.real() / k);
    }
    acc += s;
  }
  if (std::isnan(acc) || acc == std::numeric_limits<double>::infinity()) {
    throw std::range_error("log_abs_en_direct: overflow");
  }
  return acc;
}

// ln|E_n(z)| with automatic branch selection. -inf (at z = 1) is a legal
// value of the extended-real function; any other non-finite outcome throws.
inline double log_abs_en(int n, std::complex<double> z) {
  detail::require_order(n, "log_abs_en");
  detail::require_finite(z, "log_abs_en");
  return std::abs(z) <= kSeriesRadius ? log_abs_en_series(n, z)
                                      : log_abs_en_direct(n, z);
}

// ln E_n(r) on the ray r > 1, where E_n(r) = (r - 1) exp(sum r^k/k) > 0.
inline double log_abs_en_ray(int n, double r) {
  if (n < 1) {
    throw std::domain_error("log_abs_en_ray: requires n >= 1");
  }
  if (!(r > 1.0)) {
    throw std::domain_error("log_abs_en_ray: requires r > 1");
  }
  double s = std::log(r - 1.0);
  double comp = 0.0;
  double rk = 1.0;
  for (int k = 1; k <= n; ++k) {
    rk *= r;
    detail::kahan_add(s, comp, rk / k);
  }
  if (!std::isfinite(s)) {
    throw std::range_error("log_abs_en_ray: overflow");
  }
  return s;
}

// The scaled objective g(z) = ln|E_n(z)| / |z|^{n+alpha}, evaluated without
// forming either factor separately (|z|^{n+alpha} under/overflows long
// before g does). Write z = r u with |u| = 1; then
//
//   g = ln|1-z| r^{-(n+alpha)} + sum_{k=1}^{n} cos(k t) r^{k-n-alpha}/k
//
// in the direct branch, and in the tail-series branch (r <= 1/2)
//
//   g = -sum_{k>n} cos(k t) r^{k-n-alpha}/k,
//
// with every power of r formed incrementally at its final scale.
inline double g_value(int n, double alpha, std::complex<double> z) {
  if (!admissible_exponent(n, alpha)) {
    throw std::domain_error("g_value: inadmissible exponent pair");
  }
  detail::require_finite(z, "g_value");
  const double r = std::abs(z);
  if (r == 0.0) {
    throw std::domain_error("g_value: z = 0");
  }
  if (z == std::complex<double>(1.0, 0.0)) {
    return -std::numeric_limits<double>::infinity();
  }
  const std::complex<double> u = z / r;

  if (r <= kSeriesRadius) {
    std::complex<double> uk = 1.0;
    for (int k = 0; k <= n; ++k) uk *= u;   // u^{n+1}
    double p = std::pow(r, 1.0 - alpha);    // r^{(n+1)-(n+alpha)}
    const double scale = p;
    double sum = 0.0;
    double comp = 0.0;
    for (int k = n + 1;; ++k) {
      detail::kahan_add(sum, comp, -uk.real() * p / k);
      // Absolute cutoff plus a relative guard for strongly scaled values.
      const double tail = p * r / ((k + 1) * (1.0 - r));
      if (tail < kSeriesTailCut || tail < 1e-16 * scale) break;
      uk *= u;
      p *= r;
    }
    return sum;
  }

  double acc = std::log(std::abs(1.0 - z)) * std::pow(r, -(n + alpha));
  if (n > 0) {
    std::complex<double> uk = 1.0;
    for (int k = 0; k < n; ++k) uk *= u;  // u^n
    const std::complex<double> ubar = std::conj(u);
    double q = std::pow(r, -alpha);       // r^{k-n-alpha} at k = n
    double s = 0.0;
    double comp = 0.0;
    for (int k = n; k >= 1; --k) {
      detail::kahan_add(s, comp, uk.real() * q / k);
      uk *= ubar;
      q /= r;
    }
    acc += s;
  }
  if (std::isnan(acc) || acc == std::numeric_limits<double>::infinity()) {
    throw std::range_error("g_value: overflow");
  }
  return acc;
}

struct CircleMax {
  double theta;  // argmax, normalized to (-pi, pi]
  double value;  // max over the circle of ln|E_n|
};

// Maximum of theta -> ln|E_n(r e^{i theta})| over the full circle: coarse
// scan on `samples` equispaced angles, then golden-section refinement in
// the two adjacent grid cells.
inline CircleMax circle_max(int n, double r, int samples = 720) {
  detail::require_order(n, "circle_max");
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::domain_error("circle_max: requires finite r > 0");
  }
  if (samples < 8) {
    throw std::domain_error("circle_max: requires samples >= 8");
  }

  const double step = 2.0 * kPi / samples;
  auto f = [&](double t) { return log_abs_en(n, std::polar(r, t)); };

  int best = 0;
  double fbest = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    const double v = f(j * step);
    if (v > fbest) {
      fbest = v;
      best = j;
    }
  }

  const double tb = best * step;
  const SolverReport rep = maximize_bracketed(f, {tb - step, tb + step}, 1e-10);

  double theta = tb;
  double value = fbest;
  if (rep.value >= fbest) {
    theta = rep.arg;
    value = rep.value;
  }
  while (theta > kPi) theta -= 2.0 * kPi;
  while (theta <= -kPi) theta += 2.0 * kPi;
  return {theta, value};
}

}  // namespace wfac

#endif  // WFAC_PRIMARY_FACTOR_HPP
