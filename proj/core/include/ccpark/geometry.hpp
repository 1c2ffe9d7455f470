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

#ifndef CCPARK_GEOMETRY_HPP
#define CCPARK_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace ccpark {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  Vec2 operator+(const Vec2 & o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2 & o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  double dot(const Vec2 & o) const { return x * o.x + y * o.y; }
  double cross(const Vec2 & o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 rotated(double angle) const {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
};

inline Vec2 operator*(double k, const Vec2 & v) { return v * k; }

/// Normalize an angle into (-pi, pi].
inline double normalize_angle(double a)
{
  const double two_pi = 2.0 * M_PI;
  double r = std::remainder(a, two_pi);
  if (r <= -M_PI) {
    r += two_pi;
  }
  return r;
}

/// Shortest signed angular difference a - b, in (-pi, pi].
inline double angle_diff(double a, double b) { return normalize_angle(a - b); }

/// Planar configuration with path curvature. Heading is kept in (-pi, pi];
/// kappa is the heading derivative with respect to path length, so it carries
/// the sign of both the steering and the driving direction.
struct Pose {
  double x{0.0};
  double y{0.0};
  double theta{0.0};
  double kappa{0.0};

  Pose() = default;
  Pose(double x_, double y_, double theta_, double kappa_ = 0.0)
  : x(x_), y(y_), theta(normalize_angle(theta_)), kappa(kappa_)
  {
  }

  Vec2 position() const { return {x, y}; }
  Vec2 heading_vec() const { return {std::cos(theta), std::sin(theta)}; }
};

inline Pose identity_pose() { return Pose{0.0, 0.0, 0.0, 0.0}; }

/// Express `local` in the world frame of `base` (SE(2) composition).
/// The curvature of `local` is carried over unchanged.
inline Pose compose(const Pose & base, const Pose & local)
{
  const double c = std::cos(base.theta);
  const double s = std::sin(base.theta);
  return Pose{base.x + c * local.x - s * local.y, base.y + s * local.x + c * local.y,
              base.theta + local.theta, local.kappa};
}

/// Express a world-frame pose in the frame of `base` (inverse of compose).
inline Pose relative_to(const Pose & base, const Pose & world)
{
  const double c = std::cos(base.theta);
  const double s = std::sin(base.theta);
  const double dx = world.x - base.x;
  const double dy = world.y - base.y;
  return Pose{c * dx + s * dy, -s * dx + c * dy, world.theta - base.theta, world.kappa};
}

/// Vehicle dimensions and kinematic limits. Lengths in meters, kappa_max in
/// 1/m, sigma_max (curvature change per path length) in 1/m^2.
struct VehicleParams {
  double wheelbase_L{2.845};
  double body_length{4.910};
  double body_width{1.860};
  double rear_overhang{1.030};  // rear axle to rear bumper
  double kappa_max{1.0 / 6.0};
  double sigma_max{0.200};

  double min_turn_radius() const { return 1.0 / kappa_max; }
  double max_steer_angle() const { return std::atan(kappa_max * wheelbase_L); }

  void validate() const
  {
    if (wheelbase_L <= 0.0 || body_length <= 0.0 || body_width <= 0.0 || rear_overhang <= 0.0 ||
        kappa_max <= 0.0 || sigma_max <= 0.0) {
      throw std::invalid_argument("vehicle parameters must be strictly positive");
    }
    if (rear_overhang >= body_length) {
      throw std::invalid_argument("rear_overhang must be smaller than body_length");
    }
  }
};

/// Axis-aligned body rectangle in the vehicle frame (rear-axle origin,
/// x forward). Corner order: rear-right, front-right, front-left, rear-left.
struct Footprint {
  std::array<Vec2, 4> corners;
};

inline Footprint footprint_local(const VehicleParams & p)
{
  const double front = p.body_length - p.rear_overhang;
  const double rear = -p.rear_overhang;
  const double half_w = 0.5 * p.body_width;
  return Footprint{{Vec2{rear, -half_w}, Vec2{front, -half_w}, Vec2{front, half_w},
                    Vec2{rear, half_w}}};
}

/// World-frame corners of the body rectangle with the rear axle at `pose`.
inline Footprint footprint_at(const VehicleParams & p, const Pose & pose)
{
  const Footprint local = footprint_local(p);
  Footprint out;
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  for (std::size_t i = 0; i < 4; ++i) {
    out.corners[i] = Vec2{pose.x + c * local.corners[i].x - s * local.corners[i].y,
                          pose.y + s * local.corners[i].x + c * local.corners[i].y};
  }
  return out;
}

}  // namespace ccpark

#endif  // CCPARK_GEOMETRY_HPP
