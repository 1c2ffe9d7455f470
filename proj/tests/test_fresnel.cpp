// Copyright 2026 the ccpark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "ccpark/fresnel.hpp"
#include "oracles.hpp"

using namespace ccpark;

TEST_CASE("fresnel at zero")
{
  const FresnelPair r = fresnel(0.0);
  CHECK(r.c == 0.0);
  CHECK(r.s == 0.0);
}

TEST_CASE("fresnel at one matches the quadrature value")
{
  // Frozen from the adaptive-quadrature oracle at 1e-10.
  const FresnelPair r = fresnel(1.0);
  CHECK(std::abs(r.c - 0.7798934003768228) <= 1.0e-10);
  CHECK(std::abs(r.s - 0.4382591473903548) <= 1.0e-10);
}

TEST_CASE("fresnel agrees with adaptive quadrature on a log grid")
{
  for (int i = 0; i <= 120; ++i) {
    const double x = std::pow(10.0, -3.0 + 4.0 * i / 120.0);
    const auto [c, s] = oracles::fresnel_quadrature(x);
    const FresnelPair r = fresnel(x);
    CAPTURE(x);
    CHECK(std::abs(r.c - c) <= 1.0e-8);
    CHECK(std::abs(r.s - s) <= 1.0e-8);
  }
}

TEST_CASE("fresnel odd symmetry")
{
  for (double x : {0.3, 1.0, 1.7, 2.9, 6.4, 9.9}) {
    const FresnelPair p = fresnel(x);
    const FresnelPair n = fresnel(-x);
    CHECK(n.c == -p.c);
    CHECK(n.s == -p.s);
  }
}

TEST_CASE("fresnel converges toward one half with a shrinking envelope")
{
  // |C(x) - 1/2| and |S(x) - 1/2| are bounded by 1/(pi x); check the bound
  // and that the per-decade envelope shrinks.
  double prev_env = 1.0;
  for (double x : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
    const FresnelPair r = fresnel(x);
    const double env = std::max(std::abs(r.c - 0.5), std::abs(r.s - 0.5));
    CHECK(env <= 1.0 / (M_PI * x) + 1.0e-9);
    CHECK(env < prev_env);
    prev_env = env;
  }
}

TEST_CASE("spiral displacement degenerations")
{
  // Straight.
  const Vec2 s = spiral_displacement(0.0, 0.0, 4.0);
  CHECK(std::abs(s.x - 4.0) <= 1.0e-12);
  CHECK(std::abs(s.y) <= 1.0e-12);
  // Circular arc, quarter turn at radius 6.
  const double k = 1.0 / 6.0;
  const Vec2 a = spiral_displacement(k, 0.0, M_PI_2 / k);
  CHECK(std::abs(a.x - 6.0) <= 1.0e-9);
  CHECK(std::abs(a.y - 6.0) <= 1.0e-9);
  // General spiral against brute-force quadrature.
  const double kappa0 = 0.09;
  const double sigma = -0.17;
  const double len = 1.4;
  const double qx = oracles::integrate(
      [&](double u) { return std::cos(kappa0 * u + 0.5 * sigma * u * u); }, 0.0, len);
  const double qy = oracles::integrate(
      [&](double u) { return std::sin(kappa0 * u + 0.5 * sigma * u * u); }, 0.0, len);
  const Vec2 g = spiral_displacement(kappa0, sigma, len);
  CHECK(std::abs(g.x - qx) <= 1.0e-10);
  CHECK(std::abs(g.y - qy) <= 1.0e-10);
}
