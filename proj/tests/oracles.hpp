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

// Test-only reference implementations, independent of the library's
// evaluation paths: adaptive quadrature for the Fresnel integrals, a
// fixed-step 4th-order integrator for clothoid endpoints, and a random
// valid-path generator for steering round-trips.

#ifndef CCPARK_TESTS_ORACLES_HPP
#define CCPARK_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "ccpark/path.hpp"

namespace ccpark::oracles {

inline double adaptive_simpson_rec(const std::function<double(double)> & f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth)
{
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)> & f, double a, double b,
                        double tol = 1.0e-12)
{
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// Fresnel integrals by adaptive quadrature, split at unit intervals to keep
/// the oscillatory integrand resolved.
inline std::pair<double, double> fresnel_quadrature(double x, double tol = 1.0e-12)
{
  const double ax = std::abs(x);
  double c = 0.0;
  double s = 0.0;
  double a = 0.0;
  while (a < ax) {
    const double b = std::min(a + 1.0, ax);
    c += integrate([](double u) { return std::cos(M_PI / 2.0 * u * u); }, a, b, tol);
    s += integrate([](double u) { return std::sin(M_PI / 2.0 * u * u); }, a, b, tol);
    a = b;
  }
  if (x < 0.0) {
    return {-c, -s};
  }
  return {c, s};
}

/// Endpoint of the canonical clothoid by 4th-order fixed-step integration of
/// the planar state equations (x' = cos theta, y' = sin theta,
/// theta' = kappa, kappa' = sigma).
inline Pose clothoid_endpoint_rk4(double sigma, double kappa_target, double h = 1.0e-4)
{
  const double s_end = kappa_target / sigma;
  const long n = std::lround(s_end / h);
  const double step = s_end / static_cast<double>(n);
  double x = 0.0, y = 0.0, theta = 0.0;
  auto theta_at = [&](double s) { return 0.5 * sigma * s * s; };
  for (long i = 0; i < n; ++i) {
    const double s0 = i * step;
    const double t1 = theta_at(s0);
    const double t2 = theta_at(s0 + 0.5 * step);
    const double t4 = theta_at(s0 + step);
    x += step / 6.0 * (std::cos(t1) + 4.0 * std::cos(t2) + std::cos(t4));
    y += step / 6.0 * (std::sin(t1) + 4.0 * std::sin(t2) + std::sin(t4));
  }
  theta = theta_at(s_end);
  return Pose{x, y, theta, kappa_target};
}

/// Random kinematically valid path from the origin pose: straights, ramps,
/// arcs and direction switches, always within the vehicle limits and with
/// curvature ramped to zero before each switch.
inline Path random_valid_path(std::mt19937_64 & rng, const VehicleParams & vp,
                              int max_segments = 5)
{
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Pose pose{0.0, 0.0, 0.0, 0.0};
  double kappa = 0.0;
  Direction dir = uni(rng) < 0.7 ? Direction::Forward : Direction::Backward;
  Path path;
  auto ramp_to = [&](double target) {
    const double dk = target - kappa;
    if (std::abs(dk) < 1.0e-9) {
      return;
    }
    const double sg = dk > 0.0 ? 1.0 : -1.0;
    PathSegment cl = make_clothoid(pose, kappa, sg * vp.sigma_max, std::abs(dk) / vp.sigma_max,
                                   dir);
    path.append(cl);
    pose = cl.end_pose();
    kappa = target;
  };
  const int n = 1 + static_cast<int>(uni(rng) * max_segments);
  for (int i = 0; i < n; ++i) {
    if (uni(rng) < 0.2) {
      ramp_to(0.0);
      dir = opposite(dir);
    }
    const double kind = uni(rng);
    if (kind < 0.33) {
      ramp_to(0.0);
      PathSegment s = make_straight(pose, 0.5 + 7.5 * uni(rng), dir);
      path.append(s);
      pose = s.end_pose();
    } else if (kind < 0.66) {
      ramp_to((2.0 * uni(rng) - 1.0) * vp.kappa_max);
    } else if (std::abs(kappa) > 1.0e-3) {
      PathSegment a = make_arc(pose, kappa, 0.5 + 5.0 * uni(rng), dir);
      path.append(a);
      pose = a.end_pose();
    }
  }
  return path;
}

}  // namespace ccpark::oracles

#endif  // CCPARK_TESTS_ORACLES_HPP
