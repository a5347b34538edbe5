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

// Closed-form upper estimates for the growth constants, and the two
// consumers of Gamma_p: a regularized-determinant bound and an
// eigenvalue-counting bound for perturbed operators.

#ifndef WFAC_BOUNDS_HPP
#define WFAC_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wfac/constants.hpp"
#include "wfac/special_functions.hpp"

namespace wfac {

// alpha -> C_{n,alpha} is convex (a pointwise sup of exponentials in
// alpha), so the chord through the endpoints dominates:
//   C_{n,alpha} <= (1-alpha) C_{n,0} + alpha C_{n,1}.
inline double convexity_upper(int n, double alpha) {
  if (n < 1) {
    throw std::domain_error("convexity_upper: requires n >= 1");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("convexity_upper: requires alpha in [0, 1]");
  }
  return (1.0 - alpha) * c_n_alpha(n, 0.0).value +
         alpha * c_n_alpha(n, 1.0).value;
}

// Sharp-at-the-endpoints estimate for n = 1:
//   C_{1,alpha} <= (1-alpha)(1 + W0(e^{-1})) + alpha/2.
inline double c1_upper(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("c1_upper: requires alpha in [0, 1]");
  }
  return (1.0 - alpha) * (1.0 + lambert_w0(kInvE)) + 0.5 * alpha;
}

// Uniform estimate for n >= 2:
//   C_{n,alpha} <= 1 - alpha (1 - min(limit constant, n/(n+1))).
inline double cn_upper(int n, double alpha) {
  if (n < 2) {
    throw std::domain_error("cn_upper: requires n >= 2");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("cn_upper: requires alpha in [0, 1]");
  }
  const double cap = std::min(limit_constant(), n / (n + 1.0));
  return 1.0 - alpha * (1.0 - cap);
}

// Elementary estimate for n = 0:  C_{0,alpha} <= (1/alpha - 1)^{1-alpha},
// with the alpha = 1 value (= 1, and sharp there) taken by continuity.
inline double c0_upper(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("c0_upper: requires alpha in (0, 1]");
  }
  if (alpha == 1.0) return 1.0;
  return std::pow(1.0 / alpha - 1.0, 1.0 - alpha);
}

// The classical comparison sequence
//   h_n = exp( -((n-1)/(4(n+1))) / (1 + (1 + 2/(1 + csc(pi/(n+1))))^n) ),
// an older bound on the same growth problem; used here only to compare
// against g_seq. The inner power is formed via n log1p(..) to stay exact
// for large n.
inline double marchetti_h(int n) {
  if (n < 1) {
    throw std::domain_error("marchetti_h: requires n >= 1");
  }
  const double m = n + 1.0;
  const double cosec = 1.0 / std::sin(kPi / m);
  const double inner = std::exp(n * std::log1p(2.0 / (1.0 + cosec)));
  return std::exp(-((n - 1.0) / (4.0 * m)) / (1.0 + inner));
}

// A finite sample of a non-negative, non-increasing spectrum (singular
// values / approximation numbers). Construction sorts descending and
// rejects negative or non-finite entries.
class SpectrumSample {
 public:
  SpectrumSample() = default;

  explicit SpectrumSample(std::vector<double> values)
      : values_(std::move(values)) {
    for (const double v : values_) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(
            "SpectrumSample: entries must be finite and non-negative");
      }
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  // sum_k a_k^p, compensated.
  double power_sum(double p) const {
    if (!(p > 0.0)) {
      throw std::domain_error("SpectrumSample::power_sum: requires p > 0");
    }
    double s = 0.0;
    double c = 0.0;
    for (const double v : values_) {
      detail::kahan_add(s, c, std::pow(v, p));
    }
    return s;
  }

 private:
  std::vector<double> values_;
};

struct DetBound {
  double log_bound = 0.0;
  // exp(log_bound), absent when it overflows the double range.
  std::optional<double> bound;

  // Linear-scale value; overflow surfaces here as a range error while the
  // log-scale value above stays available.
  double linear() const {
    if (!bound) {
      throw std::range_error("det_bound: exp overflow on the linear scale");
    }
    return *bound;
  }
};

// |det_p(I - K)| <= exp( Gamma_p sum_k s_k(K)^p ).
inline DetBound det_bound(double p, const SpectrumSample& spectrum) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::domain_error("det_bound: requires finite p > 0");
  }
  DetBound out;
  out.log_bound = gamma_p(p) * spectrum.power_sum(p);
  const double linear = std::exp(out.log_bound);
  if (std::isfinite(linear)) {
    out.bound = linear;
  }
  return out;
}

struct EigencountInput {
  double p = 1.0;          // Schatten exponent
  double r_p = 1.0;        // domain-dependent constant, supplied by caller
  double norm_a = 0.0;     // ||A||, the unperturbed operator norm
  double s = 1.0;          // |z| = s > ||A||, radius being counted
  SpectrumSample approx_numbers;  // a_k(B - A)
};

// Number of eigenvalues of the perturbed operator B outside the closed
// disc of radius s:
//
//   N_B(s) <= Gamma_p R_p s / (s - ||A||)^{p+1} sum_k a_k^p.
//
// The bound is linear in the caller-supplied R_p; this function does not
// validate that constant beyond positivity.
inline double eigencount_bound(const EigencountInput& in) {
  if (!(in.p > 0.0) || !std::isfinite(in.p)) {
    throw std::domain_error("eigencount_bound: requires finite p > 0");
  }
  if (!(in.r_p > 0.0) || !std::isfinite(in.r_p)) {
    throw std::domain_error("eigencount_bound: requires finite R_p > 0");
  }
  if (!(in.norm_a >= 0.0) || !std::isfinite(in.norm_a)) {
    throw std::domain_error("eigencount_bound: requires finite ||A|| >= 0");
  }
  if (!(in.s > in.norm_a)) {
    throw std::domain_error("eigencount_bound: requires s > ||A||");
  }
  return gamma_p(in.p) * in.r_p * in.s /
         std::pow(in.s - in.norm_a, in.p + 1.0) *
         in.approx_numbers.power_sum(in.p);
}

}  // namespace wfac

#endif  // WFAC_BOUNDS_HPP
