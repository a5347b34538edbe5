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

// Sharp growth constants of the primary factors,
//
//   C_{n,alpha} = sup_z ln|E_n(z)| / |z|^{n+alpha},
//
// together with the derived sequence Gamma_p used in determinant and
// eigenvalue-counting bounds.
//
// For n >= 1 the supremum is attained on the positive real axis at some
// radius r > 1 + 1/n, so the computation reduces to a one-dimensional
// maximization of
//
//   g(r) = [ ln(r-1) + sum_{k=1}^{n} r^k/k ] / r^{n+alpha}.
//
// For n = 0 and alpha in (0, 1) there is a closed form in terms of the
// principal Lambert W branch:
//
//   C_{0,alpha} = (1/alpha) r_a^alpha (1 - r_a)^{1-alpha},
//   r_a = -alpha W0( -(1/alpha) e^{-1/alpha} ),
//
// where r_a in (0, 1) is the modulus of the maximizer; the supremum itself
// sits at radius R_a = e^{W0 + 1/alpha} - 1 on the negative real axis.
// C_{0,1} = 1 is only approached in the limit z -> 0.

#ifndef WFAC_CONSTANTS_HPP
#define WFAC_CONSTANTS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wfac/primary_factor.hpp"
#include "wfac/special_functions.hpp"

namespace wfac {

// Largest first-order-optimality residual accepted from the ray
// maximization. After the root polish in c_n_alpha, measured residuals
// stay below 6e-11 for n up to 500 across alpha in [0, 1].
inline constexpr double kOptimalityTolerance = 1e-9;

enum class ConstantMethod {
  ray_maximization,  // golden-section on the positive ray (n >= 1)
  closed_form,       // Lambert W form (n = 0, alpha < 1)
  limit_definition,  // supremum only attained in a limit (n = 0, alpha = 1)
};

inline const char* to_string(ConstantMethod m) {
  switch (m) {
    case ConstantMethod::ray_maximization: return "ray_maximization";
    case ConstantMethod::closed_form: return "closed_form";
    case ConstantMethod::limit_definition: return "limit_definition";
  }
  return "unknown";
}

struct ConstantResult {
  double value = 0.0;
  // Radius at which the supremum is attained. +inf when the attaining
  // radius exceeds the double range (tiny alpha), 0 when the supremum is
  // only approached in the limit z -> 0.
  double maximizing_radius = 0.0;
  ConstantMethod method = ConstantMethod::ray_maximization;
  // Scale-free certificate that the reported argmax is critical (or, for
  // the closed form, the relative defect of the W identity).
  double residual = 0.0;
};

// The ray objective g(r) = ln E_n(r) / r^{n+alpha} for r > 1, evaluated in
// scaled form: every term of the sum is produced directly at its final
// magnitude r^{k-n-alpha}/k, so no intermediate ever overflows regardless
// of n and r. The sum runs in extended precision: n sequential divisions
// would otherwise drift by ~n/2 ulp, which is what limits the accuracy of
// the maximization for n in the hundreds.
inline double ray_objective(int n, double alpha, double r) {
  if (n < 1) {
    throw std::domain_error("ray_objective: requires n >= 1");
  }
  if (!admissible_exponent(n, alpha)) {
    throw std::domain_error("ray_objective: inadmissible exponent pair");
  }
  if (!(r > 1.0)) {
    throw std::domain_error("ray_objective: requires r > 1");
  }
  const double acc = std::log(r - 1.0) * std::pow(r, -(n + alpha));
  const long double rl = r;
  long double q = std::pow(rl, static_cast<long double>(-alpha));
  long double s = 0.0L;
  for (int k = n; k >= 1; --k) {
    s += q / k;
    q /= rl;
  }
  return acc + static_cast<double>(s);
}

// Signed first-order optimality gap of the ray objective at r. Since
// (d/dr) ln E_n(r) = r^n/(r-1), criticality of g reads
//
//   r^{1-alpha}/(r-1) = (n + alpha) g(r);
//
// the gap below is positive left of the maximizer and negative right of
// it (both sides are of order 1 for every n, so no normalization is
// needed).
inline double ray_criticality_gap(int n, double alpha, double r) {
  return std::pow(r, 1.0 - alpha) / (r - 1.0) -
         (n + alpha) * ray_objective(n, alpha, r);
}

inline double ray_optimality_residual(int n, double alpha, double r) {
  return std::abs(ray_criticality_gap(n, alpha, r));
}

// Modulus r_a in (0, 1) of the maximizer for n = 0: the unique root of
// r = alpha (1 + r) ln(1 + r) expressed through Lambert W.
inline double r_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("r_alpha: requires 0 < alpha < 1");
  }
  // -(1/alpha) e^{-1/alpha} computed in log space; for tiny alpha the
  // product underflows gracefully to -0 and W0(-0) = -0.
  const double x = -std::exp(-std::log(alpha) - 1.0 / alpha);
  return -alpha * lambert_w0(x);
}

// C_{0,alpha} for alpha in (0, 1]. The closed form is evaluated through
// ln r_a = -1/alpha - W0, which survives alpha down to the underflow
// threshold (where the value approaches e^{-1}/alpha exactly).
inline ConstantResult c_0_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw std::domain_error("c_0_alpha: requires 0 < alpha <= 1");
  }
  if (alpha == 1.0) {
    // sup ln|1-z|/|z| = 1, approached along the negative axis as z -> 0.
    return {1.0, 0.0, ConstantMethod::limit_definition, 0.0};
  }
  const double x = -std::exp(-std::log(alpha) - 1.0 / alpha);
  const double w = lambert_w0(x);
  const double ra = -alpha * w;
  const double value =
      (1.0 / alpha) * std::exp(-1.0 - alpha * w) * std::pow(1.0 - ra, 1.0 - alpha);
  // e^{W + 1/alpha} - 1 saturates to +inf once 1/alpha outruns the
  // exponent range (alpha below about 1.4e-3); the value above is exact
  // regardless.
  const double radius = std::expm1(w + 1.0 / alpha);
  const double residual =
      std::abs(w * std::exp(w) - x) / std::max(std::abs(x), 1e-300);
  return {value, radius, ConstantMethod::closed_form, residual};
}

// C_{n,alpha} for any admissible pair. n >= 1 runs the ray maximization:
// coarse 64-point scan of [1 + 1/n, max(4, 2(1+1/n))], doubling the right
// endpoint while the scan maximum sits there, then golden-section
// refinement between the scan neighbors of the maximum.
inline ConstantResult c_n_alpha(int n, double alpha) {
  if (!admissible_exponent(n, alpha)) {
    throw std::domain_error("c_n_alpha: inadmissible exponent pair");
  }
  if (n == 0) {
    return c_0_alpha(alpha);
  }

  const double lo = 1.0 + 1.0 / n;
  double hi = std::max(4.0, 2.0 * lo);
  constexpr int kScanPoints = 64;

  auto g = [n, alpha](double r) { return ray_objective(n, alpha, r); };

  int best = 0;
  for (int doublings = 0;; ++doublings) {
    if (doublings > 60) {
      throw std::runtime_error("c_n_alpha: failed to bracket the maximum");
    }
    best = 0;
    double fbest = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < kScanPoints; ++j) {
      const double r = lo + (hi - lo) * j / (kScanPoints - 1);
      const double v = g(r);
      if (v > fbest) {
        fbest = v;
        best = j;
      }
    }
    if (best < kScanPoints - 1) break;
    hi *= 2.0;
  }

  const double cell = (hi - lo) / (kScanPoints - 1);
  const double bl = lo + cell * (best == 0 ? 0 : best - 1);
  const double br = lo + cell * (best + 1);
  const SolverReport rep = maximize_bracketed(g, {bl, br}, 1e-12);

  // Polish: a derivative-free search can only localize a flat maximum to
  // about sqrt(eps), which leaves a criticality gap of order 1e-5 for
  // large n. The signed gap changes sign at the true maximizer, so one
  // root pass sharpens the argmax (and the residual certificate) to
  // machine precision. Falls back to the golden-section point if no sign
  // change turns up nearby (e.g. if the gap sits inside its noise floor).
  double r_star = rep.arg;
  bool polished = false;
  auto gap = [n, alpha](double r) { return ray_criticality_gap(n, alpha, r); };
  double h = std::max(1e-7, 1e-4 * r_star);
  for (int grow = 0; grow < 24; ++grow, h *= 2.0) {
    const double a = std::max(r_star - h, 1.0 + 0.5 / n);
    const double b = r_star + h;
    const double ga = gap(a);
    const double gb = gap(b);
    if (ga == 0.0 || gb == 0.0) {
      r_star = ga == 0.0 ? a : b;
      polished = true;
      break;
    }
    if ((ga > 0.0) != (gb > 0.0)) {
      r_star = find_root_bracketed(gap, {a, b}, 1e-15 * b);
      polished = true;
      break;
    }
    if (h > r_star) break;
  }

  ConstantResult out;
  out.value = ray_objective(n, alpha, r_star);
  out.maximizing_radius = r_star;
  out.method = ConstantMethod::ray_maximization;
  out.residual = ray_optimality_residual(n, alpha, r_star);
  if (!polished && out.value < rep.value) {
    out.value = rep.value;
    out.maximizing_radius = rep.arg;
    out.residual = ray_optimality_residual(n, alpha, rep.arg);
  }
  return out;
}

// lim_{n -> inf} C_{n,alpha} = 1/x0, where x0 is the unique positive root
// of e^x / x = Ei(x). Independent of alpha.
inline double limit_constant() {
  auto f = [](double x) { return std::exp(x) / x - expint_ei(x); };
  const Bracket b{0.5, 3.0};
  if (!(f(b.lo) > 0.0) || !(f(b.hi) < 0.0)) {
    throw std::runtime_error("limit_constant: bracket lost its sign change");
  }
  return 1.0 / find_root_bracketed(f, b, 1e-13);
}

// Gamma_p = C_{ceil(p)-1, p+1-ceil(p)} for p > 0. Values of p within 1e-9
// of an integer are snapped to it, so that grids computed in floating
// point (e.g. 40 * 0.05 = 2.0000000000000004) land on the one-sided limit
// C_{p-1,1} rather than across the jump.
inline double gamma_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::domain_error("gamma_p: requires finite p > 0");
  }
  const double nearest = std::round(p);
  if (nearest >= 1.0 && std::abs(p - nearest) <= 1e-9) {
    p = nearest;
  }
  const double m = std::ceil(p);
  const int n = static_cast<int>(m) - 1;
  return c_n_alpha(n, p + 1.0 - m).value;
}

// g_n = (n+1)/n C_{n,1}, the constant appearing in the n-th order
// canonical-product estimate. Decreases to the n -> inf limit.
inline double g_seq(int n) {
  if (n < 1) {
    throw std::domain_error("g_seq: requires n >= 1");
  }
  return (n + 1.0) / n * c_n_alpha(n, 1.0).value;
}

}  // namespace wfac

#endif  // WFAC_CONSTANTS_HPP
