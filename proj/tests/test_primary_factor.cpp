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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "wfac/constants.hpp"
#include "wfac/primary_factor.hpp"

using std::complex;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Truncated tail series in extended precision, term count chosen by the
// caller so that the geometric tail bound is negligible.
double series_oracle(int n, complex<double> z, int terms) {
  const complex<long double> zl(z.real(), z.imag());
  complex<long double> zk = 1.0L;
  for (int k = 0; k < n; ++k) zk *= zl;
  long double sum = 0.0L;
  for (int m = 1; m <= terms; ++m) {
    zk *= zl;
    sum -= zk.real() / (n + m);
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("eval_en golden values") {
  CHECK(wfac::eval_en(0, {0.0, 0.0}) == complex<double>(1.0, 0.0));
  CHECK(std::abs(wfac::eval_en(3, {1.0, 0.0})) == 0.0);
  const complex<double> v = wfac::eval_en(1, {2.0, 0.0});
  CHECK_THAT(v.real(), WithinRel(-std::exp(2.0), 1e-14));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("eval_en rejects overflow and bad arguments") {
  CHECK_THROWS_AS(wfac::eval_en(3, {1e3, 0.0}), std::range_error);
  CHECK_THROWS_AS(wfac::eval_en(-1, {0.0, 0.0}), std::domain_error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(wfac::eval_en(1, {inf, 0.0}), std::domain_error);
}

TEST_CASE("log_abs_en golden values") {
  CHECK(wfac::log_abs_en(2, {0.0, 0.0}) == 0.0);
  CHECK_THAT(wfac::log_abs_en(1, {2.0, 0.0}), WithinAbs(2.0, 1e-13));
  CHECK(wfac::log_abs_en(3, {1.0, 0.0}) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("log_abs_en matches the tail series inside the disc") {
  const complex<double> z = std::polar(0.3, wfac::kPi / 3.0);
  // 0.3^121 / (121 * 0.7) < 1e-65: 120 terms are beyond machine precision.
  const double oracle = series_oracle(2, z, 120);
  CHECK_THAT(wfac::log_abs_en(2, z), WithinAbs(oracle, 1e-12));
  CHECK_THAT(oracle, WithinAbs(0.00963883323946506307, 1e-15));
}

TEST_CASE("series and direct branches agree across the switchover") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * wfac::kPi);
  std::uniform_int_distribution<int> order(0, 10);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const int n = order(rng);
    const complex<double> z = std::polar(radius(rng), angle(rng));
    if (std::abs(z) >= 1.0) continue;
    const double a = wfac::log_abs_en_series(n, z);
    const double b = wfac::log_abs_en_direct(n, z);
    worst = std::max(worst, std::abs(a - b));
  }
  INFO("worst branch disagreement " << worst);
  CHECK(worst <= 1e-11);
}

TEST_CASE("log_abs_en is consistent with eval_en") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const complex<double> z{coord(rng), coord(rng)};
    if (std::abs(z - complex<double>(1.0, 0.0)) < 1e-6) continue;
    const int n = i % 6;
    const double la = wfac::log_abs_en(n, z);
    const double mag = std::abs(wfac::eval_en(n, z));
    REQUIRE(mag > 0.0);
    CHECK_THAT(std::exp(la), WithinRel(mag, 1e-12));
  }
}

TEST_CASE("log_abs_en_ray golden values and domain") {
  CHECK_THAT(wfac::log_abs_en_ray(1, 2.0), WithinAbs(2.0, 1e-14));
  CHECK_THAT(wfac::log_abs_en_ray(2, 2.0), WithinAbs(4.0, 1e-14));
  CHECK_THAT(wfac::log_abs_en_ray(3, 1.5),
             WithinRel(3.05685281944005469, 1e-13));
  CHECK_THROWS_AS(wfac::log_abs_en_ray(1, 1.0), std::domain_error);
  CHECK_THROWS_AS(wfac::log_abs_en_ray(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(wfac::log_abs_en_ray(0, 2.0), std::domain_error);
}

TEST_CASE("log_abs_en_ray agrees with the general evaluator on the ray") {
  for (int n = 1; n <= 5; ++n) {
    for (double r = 1.1; r <= 6.0; r += 0.37) {
      const double a = wfac::log_abs_en_ray(n, r);
      const double b = wfac::log_abs_en(n, {r, 0.0});
      CHECK_THAT(a, WithinRel(b, 1e-13));
    }
  }
}

TEST_CASE("g_value golden values") {
  CHECK_THAT(wfac::g_value(1, 1.0, {-1.0, 0.0}),
             WithinAbs(std::log(2.0) - 1.0, 1e-14));
  const double v = wfac::g_value(1, 0.0, {3.0, 0.0});
  CHECK_THAT(v, WithinAbs((std::log(2.0) + 3.0) / 3.0, 1e-14));
  CHECK(v > 1.0);  // g(r) > 1/n for r > 2 at alpha = 0
  CHECK(wfac::g_value(2, 0.5, {1.0, 0.0}) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("g_value domain errors") {
  CHECK_THROWS_AS(wfac::g_value(1, 1.0, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(wfac::g_value(0, 0.0, {0.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(wfac::g_value(1, 1.5, {0.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(wfac::g_value(1, -0.1, {0.5, 0.0}), std::domain_error);
}

TEST_CASE("g_value equals the unscaled quotient at moderate points") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> radius(0.05, 6.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * wfac::kPi);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 5;
    const double alpha = (i % 11) / 10.0;
    const complex<double> z = std::polar(radius(rng), angle(rng));
    const double direct =
        wfac::log_abs_en(n, z) / std::pow(std::abs(z), n + alpha);
    CHECK_THAT(wfac::g_value(n, alpha, z), WithinAbs(direct, 1e-13));
  }
}

TEST_CASE("g_value survives scales where the unscaled form overflows") {
  // ln E_200(50) ~ 50^200/200 overflows; the scaled quotient is ~0.75.
  const double g = wfac::g_value(200, 0.5, {50.0, 0.0});
  CHECK(std::isfinite(g));
  CHECK_THAT(g, WithinRel(wfac::ray_objective(200, 0.5, 50.0), 1e-12));
  CHECK_THROWS_AS(wfac::log_abs_en(200, {50.0, 0.0}), std::range_error);
}

TEST_CASE("g_value tends to zero along rays for alpha < 1") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * wfac::kPi);
  for (const double alpha : {0.0, 0.3, 0.7, 0.99}) {
    for (int n = 1; n <= 4; ++n) {
      const double theta = angle(rng);
      for (const double r : {1e-4, 1e-6, 1e-8}) {
        const double g = wfac::g_value(n, alpha, std::polar(r, theta));
        CHECK(std::abs(g) <= std::pow(r, 1.0 - alpha));
      }
    }
  }
}

TEST_CASE("g_value small-z limit at alpha = 1 is 1/(n+1) in the top direction") {
  // As z -> 0, g -> -cos((n+1) theta)/(n+1); the sup over directions is
  // attained at theta = pi/(n+1).
  for (int n = 1; n <= 6; ++n) {
    const double theta = wfac::kPi / (n + 1);
    const double g = wfac::g_value(n, 1.0, std::polar(1e-7, theta));
    CHECK_THAT(g, WithinAbs(1.0 / (n + 1), 1e-6));
    if (n % 2 == 0) {
      const double gpi = wfac::g_value(n, 1.0, std::polar(1e-7, wfac::kPi));
      CHECK_THAT(gpi, WithinAbs(1.0 / (n + 1), 1e-6));
    }
  }
}

TEST_CASE("circle_max finds the on-axis maximum for r >= 1 + 1/n") {
  // At (n, r) = (1, 2) the angular curvature of ln|E_1| vanishes on the
  // axis (the max is quartically flat), so theta is only localizable to
  // ~1e-4 in double precision even though the value is sharp.
  const wfac::CircleMax cm = wfac::circle_max(1, 2.0, 720);
  CHECK_THAT(cm.theta, WithinAbs(0.0, 5e-4));
  CHECK_THAT(cm.value, WithinAbs(2.0, 1e-8));

  // At r = 3 the curvature is -2.25, and theta localizes tightly.
  const wfac::CircleMax cm3 = wfac::circle_max(1, 3.0, 720);
  CHECK_THAT(cm3.theta, WithinAbs(0.0, 1e-5));
  CHECK_THAT(cm3.value, WithinAbs(wfac::log_abs_en_ray(1, 3.0), 1e-10));

  const wfac::CircleMax cm2 = wfac::circle_max(2, 1.5, 720);
  CHECK_THAT(cm2.value, WithinAbs(wfac::log_abs_en(2, {1.5, 0.0}), 1e-8));
}

TEST_CASE("circle_max refinement is monotone in the sample count") {
  for (const double r : {0.7, 1.3, 2.5}) {
    const double coarse = wfac::circle_max(1, r, 8).value;
    const double fine = wfac::circle_max(1, r, 4096).value;
    CHECK(coarse <= fine + 1e-9);
  }
}

TEST_CASE("circle_max argument validation") {
  CHECK_THROWS_AS(wfac::circle_max(1, 0.0, 720), std::domain_error);
  CHECK_THROWS_AS(wfac::circle_max(1, -1.0, 720), std::domain_error);
  CHECK_THROWS_AS(wfac::circle_max(1, 2.0, 7), std::domain_error);
}

TEST_CASE("admissible_exponent matches the domain rule") {
  CHECK(wfac::admissible_exponent(0, 0.5));
  CHECK(wfac::admissible_exponent(0, 1.0));
  CHECK_FALSE(wfac::admissible_exponent(0, 0.0));
  CHECK(wfac::admissible_exponent(1, 0.0));
  CHECK(wfac::admissible_exponent(3, 1.0));
  CHECK_FALSE(wfac::admissible_exponent(3, 1.0001));
  CHECK_FALSE(wfac::admissible_exponent(-1, 0.5));
  CHECK_FALSE(wfac::admissible_exponent(1, std::nan("")));
}
