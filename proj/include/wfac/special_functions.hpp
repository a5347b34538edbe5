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

#ifndef WFAC_SPECIAL_FUNCTIONS_HPP
#define WFAC_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

namespace wfac {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kE = 2.71828182845904523536;
inline constexpr double kInvE = 0.36787944117144232160;        // e^{-1}
inline constexpr double kEulerGamma = 0.57721566490153286061;  // 20 digits
inline constexpr double kLogDblMax = 709.782712893384;         // ln(DBL_MAX)

namespace detail {

// Compensated (Kahan) accumulation: s += t with carry c.
inline void kahan_add(double& s, double& c, double t) {
  const double y = t - c;
  const double u = s + y;
  c = (u - s) - y;
  s = u;
}

// Series for W0 around the branch point x = -1/e, in powers of
// p = sqrt(2(1 + e x)).
inline double lambert_w0_branch_series(double p) {
  return -1.0 +
         p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
}

}  // namespace detail

// Principal branch of the Lambert W function: the inverse of w -> w e^w on
// [-1, inf), defined for x >= -1/e.
//
// Initial guesses: branch-point series for x near -1/e, a Taylor polynomial
// around 0 for small |x|, and w0 = L (1 - log(1+L)/(2+L)) with L = log(1+x)
// otherwise. Halley iteration then drives the residual w e^w - x to
// machine precision (quartic-ish in practice, <= 5 iterations).
inline double lambert_w0(double x) {
  if (std::isnan(x)) {
    throw std::domain_error("lambert_w0: NaN argument");
  }
  if (x < -kInvE) {
    // -1/e itself is not exactly representable; absorb rounding fuzz.
    if (x > -kInvE - 1e-15) {
      x = -kInvE;
    } else {
      throw std::domain_error("lambert_w0: argument below -1/e");
    }
  }
  if (x == 0.0) {
    return 0.0;
  }

  double w;
  if (x < -0.25) {
    // 1 + e x cancels catastrophically near the branch point; an fma plus
    // a double-double split of e (kELow = e - (double)e) recovers the
    // digits a plain product throws away.
    constexpr double kELow = 1.4456468917292502e-16;
    double s = 2.0 * (std::fma(kE, x, 1.0) + kELow * x);
    if (s < 0.0) s = 0.0;
    const double p = std::sqrt(s);
    w = detail::lambert_w0_branch_series(p);
    if (p < 1e-5) {
      // Series truncation error O(p^5) is far below one ulp of w ~ -1, and
      // Halley's denominator degenerates this close to the branch point.
      return w;
    }
  } else if (x < 0.5) {
    w = x * (1.0 + x * (-1.0 + x * (1.5 - x * (8.0 / 3.0))));
  } else {
    const double l = std::log1p(x);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  }

  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double fw = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = fw / (ew * wp1 - 0.5 * (w + 2.0) * fw / wp1);
    w -= step;
    if (w < -1.0) w = -1.0 + 1e-14;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

// Exponential integral Ei(x) = gamma + ln x + sum_{k>=1} x^k/(k k!), x > 0.
// The ascending series converges rapidly for the modest arguments used in
// this library (x of order a few).
inline double expint_ei(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("expint_ei: requires x > 0");
  }
  double sum = 0.0;
  double term = 1.0;  // x^k / k!
  for (int k = 1; k < 1000; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (add <= sum * 1e-17) break;
  }
  return kEulerGamma + std::log(x) + sum;
}

// A bracket [lo, hi] for the 1-D solvers below.
struct Bracket {
  double lo;
  double hi;
};

struct SolverReport {
  double arg = 0.0;    // located extremizer
  double value = 0.0;  // f(arg)
  std::size_t iterations = 0;
  double width_at_stop = 0.0;
};

namespace detail {

inline void check_bracket(const Bracket& b, double tol, const char* who) {
  if (!(std::isfinite(b.lo) && std::isfinite(b.hi)) || !(b.lo < b.hi)) {
    throw std::invalid_argument(std::string(who) + ": requires finite lo < hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": requires tol > 0");
  }
}

}  // namespace detail

// Golden-section search for a maximum of f on [lo, hi]. Finds the global
// maximum when f is unimodal on the bracket, a local maximum otherwise.
// Any non-finite function value inside the bracket is an error.
template <typename F>
SolverReport maximize_bracketed(F&& f, Bracket b, double tol) {
  detail::check_bracket(b, tol, "maximize_bracketed");

  constexpr double kInvPhi = 0.61803398874989484820;

  auto eval = [&f](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw std::range_error("maximize_bracketed: non-finite function value");
    }
    return v;
  };

  double lo = b.lo;
  double hi = b.hi;
  // Stall guard: never ask for a width below floating-point resolution.
  const double eff_tol = std::max(
      tol, 4.0 * std::numeric_limits<double>::epsilon() *
               std::max({std::abs(lo), std::abs(hi), 1.0}));

  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  std::size_t iters = 0;
  while (hi - lo > eff_tol && iters < 300) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = eval(d);
    }
    ++iters;
  }
  SolverReport rep;
  if (fc >= fd) {
    rep.arg = c;
    rep.value = fc;
  } else {
    rep.arg = d;
    rep.value = fd;
  }
  rep.iterations = iters;
  rep.width_at_stop = hi - lo;
  return rep;
}

// Root of f on [lo, hi], where f changes sign. Bisection interleaved with
// secant steps: the secant step supplies the acceleration, the bisection
// step guarantees the bracket width halves at least every other iteration.
template <typename F>
double find_root_bracketed(F&& f, Bracket b, double tol) {
  detail::check_bracket(b, tol, "find_root_bracketed");

  double a = b.lo;
  double bb = b.hi;
  double fa = f(a);
  double fb = f(bb);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw std::range_error("find_root_bracketed: non-finite endpoint value");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return bb;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw std::invalid_argument("find_root_bracketed: no sign change on bracket");
  }

  const double eff_tol = std::max(
      tol, 4.0 * std::numeric_limits<double>::epsilon() *
               std::max({std::abs(a), std::abs(bb), 1.0}));

  for (int it = 0; it < 300 && bb - a > eff_tol; ++it) {
    const double mid = 0.5 * (a + bb);
    double x = mid;
    if (it % 2 == 0 && fb != fa) {
      const double s = (a * fb - bb * fa) / (fb - fa);
      if (s > a && s < bb) x = s;
    }
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw std::range_error("find_root_bracketed: non-finite function value");
    }
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (fa > 0.0)) {
      a = x;
      fa = fx;
    } else {
      bb = x;
      fb = fx;
    }
  }
  return 0.5 * (a + bb);
}

}  // namespace wfac

#endif  // WFAC_SPECIAL_FUNCTIONS_HPP
