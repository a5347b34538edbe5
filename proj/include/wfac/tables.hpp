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

// CSV table emission for the CLI. All tables share one comment-style
// header line ("# columns: ..."), 12-significant-digit formatting and \n
// line endings, so repeated runs are byte-identical.

#ifndef WFAC_TABLES_HPP
#define WFAC_TABLES_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wfac/bounds.hpp"
#include "wfac/constants.hpp"

namespace wfac {

// An inclusive arithmetic grid "start:stop:step".
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

namespace detail {

inline double parse_double_field(std::string_view text, const char* what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument(std::string("grid: malformed ") + what +
                                " field '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace detail

inline GridSpec parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
      text.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument(
        "grid: expected start:stop:step, got '" + std::string(text) + "'");
  }
  GridSpec g;
  g.start = detail::parse_double_field(text.substr(0, c1), "start");
  g.stop = detail::parse_double_field(text.substr(c1 + 1, c2 - c1 - 1), "stop");
  g.step = detail::parse_double_field(text.substr(c2 + 1), "step");
  return g;
}

// Expands the grid. The point count is floor((stop-start)/step + 1e-9) + 1,
// and any point within step * 1e-6 of stop is snapped onto it, so that
// accumulated rounding (0 + 100 * 0.01 = 1.0000000000000002) cannot push
// the last point past a domain boundary.
inline std::vector<double> grid_points(const GridSpec& g) {
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) ||
      !std::isfinite(g.step)) {
    throw std::invalid_argument("grid: non-finite field");
  }
  if (!(g.step > 0.0) || !(g.start < g.stop)) {
    throw std::invalid_argument("grid: requires start < stop and step > 0");
  }
  const double span = (g.stop - g.start) / g.step;
  if (span > 1e6) {
    throw std::invalid_argument("grid: more than 1e6 points");
  }
  const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    double v = g.start + static_cast<double>(i) * g.step;
    if (std::abs(v - g.stop) <= g.step * 1e-6) v = g.stop;
    out.push_back(v);
  }
  return out;
}

// 12 significant digits, shortest form ("%.12g").
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// p -> Gamma_p. Jumps upward at integer p; the grid convention above makes
// near-integer p land exactly on the left limit.
inline std::string fig1_table(const GridSpec& p_grid) {
  const std::vector<double> ps = grid_points(p_grid);
  for (const double p : ps) {
    if (!(p > 0.0)) {
      throw std::invalid_argument("fig1_table: p grid must stay positive");
    }
  }
  std::string out = "# columns: p,gamma\n";
  for (const double p : ps) {
    out += format_number(p);
    out += ',';
    out += format_number(gamma_p(p));
    out += '\n';
  }
  return out;
}

// (n, alpha) -> C_{n,alpha}, n-major ordering.
inline std::string fig2_table(const std::vector<int>& n_list,
                              const GridSpec& alpha_grid) {
  const std::vector<double> alphas = grid_points(alpha_grid);
  for (const int n : n_list) {
    if (n < 1) {
      throw std::invalid_argument("fig2_table: n must be >= 1");
    }
  }
  for (const double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw std::invalid_argument("fig2_table: alpha grid must lie in [0, 1]");
    }
  }
  std::string out = "# columns: n,alpha,C\n";
  for (const int n : n_list) {
    for (const double a : alphas) {
      out += format_number(n);
      out += ',';
      out += format_number(a);
      out += ',';
      out += format_number(c_n_alpha(n, a).value);
      out += '\n';
    }
  }
  return out;
}

// alpha -> C_{0,alpha}, the maximizer modulus r_alpha and the elementary
// upper estimate. r_alpha is only defined on (0, 1); at alpha = 1 the
// column carries its continuous extension, 1.
inline std::string fig3_table(const GridSpec& alpha_grid) {
  const std::vector<double> alphas = grid_points(alpha_grid);
  for (const double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) {
      throw std::invalid_argument("fig3_table: alpha grid must lie in (0, 1]");
    }
  }
  std::string out = "# columns: alpha,C0,r_alpha,upper_bound\n";
  for (const double a : alphas) {
    const double ra = a == 1.0 ? 1.0 : r_alpha(a);
    out += format_number(a);
    out += ',';
    out += format_number(c_0_alpha(a).value);
    out += ',';
    out += format_number(ra);
    out += ',';
    out += format_number(c0_upper(a));
    out += '\n';
  }
  return out;
}

}  // namespace wfac

#endif  // WFAC_TABLES_HPP
