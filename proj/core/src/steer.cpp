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

#include "ccpark/steer.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ccpark/fresnel.hpp"

namespace ccpark {

namespace {

constexpr double kRootTol = 1.0e-12;

// Geometry of an elementary turn: curvature ramps 0 -> k -> 0 at maximum
// sharpness, with a constant-curvature arc in the middle once the deflection
// is large enough to saturate kappa_max.
struct TurnGeometry {
  double kappa_max;
  double sigma_max;
  double s_cl;       // clothoid length to saturation
  double theta_cl;   // heading gained over one saturated clothoid
  Vec2 cl_up;        // displacement of the 0 -> kappa_max clothoid
  Vec2 cl_down;      // displacement of the kappa_max -> 0 clothoid

  explicit TurnGeometry(const VehicleParams & p)
  : kappa_max(p.kappa_max),
    sigma_max(p.sigma_max),
    s_cl(p.kappa_max / p.sigma_max),
    theta_cl(0.5 * p.kappa_max * p.kappa_max / p.sigma_max),
    cl_up(spiral_displacement(0.0, p.sigma_max, s_cl)),
    cl_down(spiral_displacement(p.kappa_max, -p.sigma_max, s_cl))
  {
  }

  double length(double deflection) const
  {
    const double a = std::abs(deflection);
    if (a >= 2.0 * theta_cl) {
      return 2.0 * s_cl + (a - 2.0 * theta_cl) / kappa_max;
    }
    return 2.0 * std::sqrt(a / sigma_max);
  }

  // Local displacement of the turn in its start frame, for a Forward drive.
  // Backward drives negate the displacement (heading change is unchanged).
  Vec2 displacement(double deflection, Direction dir) const
  {
    const double a = std::abs(deflection);
    Vec2 disp;
    if (a >= 2.0 * theta_cl) {
      const double gamma = a - 2.0 * theta_cl;
      const Vec2 arc{std::sin(gamma) / kappa_max, (1.0 - std::cos(gamma)) / kappa_max};
      disp = cl_up + arc.rotated(theta_cl) + cl_down.rotated(theta_cl + gamma);
    } else if (a < 1.0e-15) {
      return {0.0, 0.0};
    } else {
      const double kt = std::sqrt(a * sigma_max);
      const double st = kt / sigma_max;
      disp = spiral_displacement(0.0, sigma_max, st) +
             spiral_displacement(kt, -sigma_max, st).rotated(0.5 * a);
    }
    if (deflection < 0.0) {
      disp.y = -disp.y;
    }
    if (dir == Direction::Backward) {
      disp = disp * -1.0;
    }
    return disp;
  }

  // Turn segments appended from `start` (start curvature must be zero).
  void append_turn(Path & path, const Pose & start, double deflection, Direction dir) const
  {
    const double a = std::abs(deflection);
    if (a < 1.0e-15) {
      return;
    }
    const double sgn = deflection > 0.0 ? 1.0 : -1.0;
    Pose pose = start;
    if (a >= 2.0 * theta_cl) {
      PathSegment up = make_clothoid(pose, 0.0, sgn * sigma_max, s_cl, dir);
      pose = up.end_pose();
      path.append(up);
      const double gamma = a - 2.0 * theta_cl;
      if (gamma > 1.0e-15) {
        PathSegment arc = make_arc(pose, sgn * kappa_max, gamma / kappa_max, dir);
        pose = arc.end_pose();
        path.append(arc);
      }
      path.append(make_clothoid(pose, sgn * kappa_max, -sgn * sigma_max, s_cl, dir));
    } else {
      const double kt = std::sqrt(a * sigma_max);
      const double st = kt / sigma_max;
      PathSegment up = make_clothoid(pose, 0.0, sgn * sigma_max, st, dir);
      pose = up.end_pose();
      path.append(up);
      path.append(make_clothoid(pose, sgn * kt, -sgn * sigma_max, st, dir));
    }
  }
};

struct CscSolution {
  double alpha{0.0};
  double beta{0.0};
  double straight{0.0};
  double length{0.0};
};

// Turn-straight-turn residual perpendicular to the middle heading. A root
// with a nonnegative straight length is an exact connection.
class CscProblem {
 public:
  CscProblem(const TurnGeometry & geom, const Vec2 & target, double total_deflection,
             Direction dir)
  : geom_(geom), target_(target), phi_(total_deflection), dir_(dir)
  {
  }

  double perp(double alpha) const
  {
    const Vec2 rem = remainder(alpha);
    return std::cos(alpha) * rem.y - std::sin(alpha) * rem.x;
  }

  double straight_len(double alpha) const
  {
    const Vec2 rem = remainder(alpha);
    const double along = std::cos(alpha) * rem.x + std::sin(alpha) * rem.y;
    return static_cast<double>(direction_sign(dir_)) * along;
  }

  double beta(double alpha) const { return phi_ - alpha; }

 private:
  Vec2 remainder(double alpha) const
  {
    const Vec2 u1 = geom_.displacement(alpha, dir_);
    const Vec2 u2 = geom_.displacement(phi_ - alpha, dir_).rotated(alpha);
    return target_ - u1 - u2;
  }

  const TurnGeometry & geom_;
  Vec2 target_;
  double phi_;
  Direction dir_;
};

// All turn-straight-turn connections from the origin pose to (target, phi),
// driving entirely in `dir`.
std::vector<CscSolution> solve_csc(const TurnGeometry & geom, const Vec2 & target, double phi,
                                   Direction dir, const SteerOptions & opt)
{
  std::vector<CscSolution> out;
  const double cap = opt.max_turn_deflection;
  for (int w = -1; w <= 1; ++w) {
    const double total = phi + 2.0 * M_PI * w;
    const double lo = std::max(-cap, total - cap);
    const double hi = std::min(cap, total + cap);
    if (lo >= hi) {
      continue;
    }
    CscProblem prob(geom, target, total, dir);
    const int n = std::max(opt.scan_points, 16);
    const double step = (hi - lo) / n;
    double prev_alpha = lo;
    double prev_val = prob.perp(lo);
    auto try_accept = [&](double alpha) {
      const double len = prob.straight_len(alpha);
      if (len < -1.0e-7) {
        return;
      }
      CscSolution sol;
      sol.alpha = alpha;
      sol.beta = prob.beta(alpha);
      sol.straight = std::max(len, 0.0);
      sol.length = geom.length(sol.alpha) + sol.straight + geom.length(sol.beta);
      for (const auto & existing : out) {
        if (std::abs(existing.alpha - alpha) < 1.0e-8 &&
            std::abs(existing.beta - sol.beta) < 1.0e-8) {
          return;
        }
      }
      out.push_back(sol);
    };
    // Bracketed roots: a few bisection steps, then secant polishing.
    auto refine = [&prob](double a, double b, double fa, double fb) {
      for (int it = 0; it < 10 && (b - a) > 1.0e-13; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = prob.perp(m);
        if (std::abs(fm) < kRootTol) {
          return m;
        }
        if ((fa < 0.0) != (fm < 0.0)) {
          b = m;
          fb = fm;
        } else {
          a = m;
          fa = fm;
        }
      }
      double x0 = a, f0 = fa, x1 = b, f1 = fb;
      for (int it = 0; it < 12; ++it) {
        const double denom = f1 - f0;
        if (std::abs(denom) < 1.0e-300) {
          break;
        }
        const double x2 = x1 - f1 * (x1 - x0) / denom;
        if (!(x2 >= a - 1.0e-9 && x2 <= b + 1.0e-9)) {
          break;
        }
        const double f2 = prob.perp(x2);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (std::abs(f2) < kRootTol) {
          break;
        }
      }
      return std::abs(f1) <= std::abs(f0) ? x1 : x0;
    };
    for (int i = 1; i <= n; ++i) {
      const double alpha = lo + i * step;
      const double val = prob.perp(alpha);
      if (std::abs(prev_val) < kRootTol) {
        try_accept(prev_alpha);
      } else if ((prev_val < 0.0) != (val < 0.0)) {
        try_accept(refine(prev_alpha, alpha, prev_val, val));
      }
      prev_alpha = alpha;
      prev_val = val;
    }
    if (std::abs(prev_val) < kRootTol) {
      try_accept(prev_alpha);
    }
  }
  return out;
}

// Clothoid ramping curvature from `kappa` down to zero at max sharpness.
Path curvature_rampdown(const Pose & from, Direction dir, const VehicleParams & params)
{
  Path p;
  if (std::abs(from.kappa) < 1.0e-12) {
    return p;
  }
  const double sgn = from.kappa > 0.0 ? 1.0 : -1.0;
  const double len = std::abs(from.kappa) / params.sigma_max;
  p.append(make_clothoid(from, from.kappa, -sgn * params.sigma_max, len, dir));
  return p;
}

// Clothoid ramping curvature from zero up to `to.kappa`, positioned so that
// it ends exactly at `to`. Returns the ramp and its required start pose.
std::pair<Path, Pose> curvature_rampup_into(const Pose & to, Direction dir,
                                            const VehicleParams & params)
{
  Path p;
  if (std::abs(to.kappa) < 1.0e-12) {
    Pose start = to;
    start.kappa = 0.0;
    return {p, start};
  }
  const double sgn = to.kappa > 0.0 ? 1.0 : -1.0;
  const double len = std::abs(to.kappa) / params.sigma_max;
  PathSegment probe =
      make_clothoid(Pose{0.0, 0.0, 0.0, 0.0}, 0.0, sgn * params.sigma_max, len, dir);
  const Pose local_end = probe.end_pose();
  const double start_theta = to.theta - local_end.theta;
  const Vec2 offset = Vec2{local_end.x, local_end.y}.rotated(start_theta);
  Pose start{to.x - offset.x, to.y - offset.y, start_theta, 0.0};
  p.append(make_clothoid(start, 0.0, sgn * params.sigma_max, len, dir));
  return {p, start};
}

struct Candidate {
  Path path;
  double length{0.0};
};

void build_csc_candidates(const Pose & a, const Pose & b, Direction dir,
                          const VehicleParams & params, const TurnGeometry & geom,
                          const SteerOptions & opt, std::vector<Candidate> & out)
{
  const Pose local = relative_to(a, b);
  const Vec2 target{local.x, local.y};
  const double phi = normalize_angle(local.theta);
  const double d = static_cast<double>(direction_sign(dir));

  // Straight-only: aligned headings with the target on the driving axis.
  if (std::abs(phi) < 1.0e-12 && std::abs(target.y) < 1.0e-9 && d * target.x > 1.0e-12) {
    Path path;
    path.append(make_straight(a, d * target.x, dir));
    out.push_back({std::move(path), 0.0});
  }

  // Turn-only: a single elementary turn closing both position and heading.
  // The straight length collapses with a square-root cusp here, so the
  // scanned family cannot represent these solutions.
  for (int w = -1; w <= 1; ++w) {
    const double deflection = phi + 2.0 * M_PI * w;
    if (std::abs(deflection) < 1.0e-15 || std::abs(deflection) > opt.max_turn_deflection) {
      continue;
    }
    const Vec2 disp = geom.displacement(deflection, dir);
    if (std::hypot(disp.x - target.x, disp.y - target.y) < 1.0e-7) {
      Path path;
      geom.append_turn(path, a, deflection, dir);
      out.push_back({std::move(path), 0.0});
    }
  }

  for (const auto & sol : solve_csc(geom, target, phi, dir, opt)) {
    Path path;
    geom.append_turn(path, a, sol.alpha, dir);
    Pose pose = path.empty() ? a : path.end_pose();
    pose.kappa = 0.0;
    if (sol.straight > 1.0e-12) {
      PathSegment s = make_straight(pose, sol.straight, dir);
      pose = s.end_pose();
      path.append(s);
    }
    geom.append_turn(path, pose, sol.beta, dir);
    out.push_back({std::move(path), 0.0});
  }
}

double endpoint_error(const Path & path, const Pose & from, const Pose & to)
{
  const Pose end = path.empty() ? from : path.end_pose();
  const double dpos = std::hypot(end.x - to.x, end.y - to.y);
  const double dth = std::abs(angle_diff(end.theta, to.theta));
  const double dk = std::abs(end.kappa - to.kappa);
  return std::max(dpos, std::max(dth, dk));
}

}  // namespace

std::vector<Path> cc_steer_alternatives(const Pose & from, const Pose & to,
                                        const VehicleParams & params, const SteerOptions & opt,
                                        bool with_backoff, std::size_t max_count)
{
  const TurnGeometry geom(params);

  // Coincident poses: nothing to do.
  if (std::hypot(to.x - from.x, to.y - from.y) < 1.0e-9 &&
      std::abs(angle_diff(to.theta, from.theta)) < 1.0e-9 &&
      std::abs(to.kappa - from.kappa) < 1.0e-9) {
    return {Path{}};
  }

  std::vector<Candidate> candidates;
  const Direction dirs[2] = {Direction::Forward, Direction::Backward};

  for (Direction dir : dirs) {
    if (opt.required_final_direction && *opt.required_final_direction != dir) {
      continue;
    }
    const Path prefix = curvature_rampdown(from, dir, params);
    const Pose a = prefix.empty() ? Pose{from.x, from.y, from.theta, 0.0} : prefix.end_pose();
    auto [suffix, b] = curvature_rampup_into(to, dir, params);

    std::vector<Candidate> bodies;
    build_csc_candidates(a, b, dir, params, geom, opt, bodies);
    for (auto & cand : bodies) {
      Path full = prefix;
      full.append(cand.path);
      full.append(suffix);
      candidates.push_back({std::move(full), 0.0});
    }
  }

  if (opt.allow_backoff && (with_backoff || candidates.empty())) {
    const double backoff_lengths[3] = {1.5, 3.0, 6.0};
    for (Direction escape_dir : dirs) {
      const Direction body_dir = opposite(escape_dir);
      if (opt.required_final_direction && *opt.required_final_direction != body_dir) {
        continue;
      }
      for (double m : backoff_lengths) {
        Path prefix = curvature_rampdown(from, escape_dir, params);
        Pose pose = prefix.empty() ? Pose{from.x, from.y, from.theta, 0.0} : prefix.end_pose();
        PathSegment escape = make_straight(pose, m, escape_dir);
        pose = escape.end_pose();
        prefix.append(escape);
        auto [suffix, b] = curvature_rampup_into(to, body_dir, params);
        std::vector<Candidate> bodies;
        build_csc_candidates(pose, b, body_dir, params, geom, opt, bodies);
        for (auto & cand : bodies) {
          Path full = prefix;
          full.append(cand.path);
          full.append(suffix);
          candidates.push_back({std::move(full), 0.0});
        }
      }
    }
  }

  std::vector<Path> out;
  for (auto & cand : candidates) {
    if (endpoint_error(cand.path, from, to) > opt.endpoint_tol) {
      continue;
    }
    cand.length = cand.path.length();
    out.push_back(std::move(cand.path));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Path & a, const Path & b) { return a.length() < b.length(); });
  if (out.size() > max_count) {
    out.resize(max_count);
  }
  return out;
}

std::optional<Path> cc_steer(const Pose & from, const Pose & to, const VehicleParams & params,
                             const SteerOptions & opt)
{
  auto alternatives = cc_steer_alternatives(from, to, params, opt, false, 1);
  if (alternatives.empty()) {
    return std::nullopt;
  }
  return std::move(alternatives.front());
}

}  // namespace ccpark
