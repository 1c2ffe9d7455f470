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

#ifndef CCPARK_PATH_HPP
#define CCPARK_PATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ccpark/geometry.hpp"

namespace ccpark {

enum class SegmentKind { Straight, Clothoid, Arc };

enum class Direction : int { Forward = +1, Backward = -1 };

inline int direction_sign(Direction d) { return static_cast<int>(d); }
inline Direction opposite(Direction d)
{
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

/// One constant-sharpness piece of a path. The curvature law along the
/// segment is kappa(s) = start_kappa + sigma * s for s in [0, length];
/// heading integrates kappa, position advances along the heading with the
/// sign of `direction`. A Backward segment therefore traces the same curve
/// as its Forward counterpart, traversed rear-first.
struct PathSegment {
  SegmentKind kind{SegmentKind::Straight};
  double length{0.0};
  double start_kappa{0.0};
  double sigma{0.0};
  Direction direction{Direction::Forward};
  Pose start_pose;
  bool on_target_tree{false};  // tracked portion gets the slower speed cap

  double end_kappa() const { return start_kappa + sigma * length; }

  /// Pose after driving arc length s (0 <= s <= length) along the segment.
  Pose pose_at(double s) const;
  Pose end_pose() const { return pose_at(length); }
  double kappa_at(double s) const { return start_kappa + sigma * s; }
};

PathSegment make_straight(const Pose & start, double length, Direction dir);
PathSegment make_arc(const Pose & start, double kappa, double length, Direction dir);
PathSegment make_clothoid(const Pose & start, double kappa0, double sigma, double length,
                          Direction dir);

/// An ordered run of segments. Joints must be continuous in position and
/// heading; curvature must be continuous except across a change of driving
/// direction (the vehicle is stopped there and may re-steer in place).
struct Path {
  std::vector<PathSegment> segments;

  double length() const;
  bool empty() const { return segments.empty(); }
  Pose start_pose() const;
  Pose end_pose() const;

  /// Pose at arc length s along the whole path (clamped to [0, length]).
  Pose pose_at(double s) const;
  Direction direction_at(double s) const;

  void append(const PathSegment & seg) { segments.push_back(seg); }
  void append(const Path & other);

  /// Number of forward/backward changes between consecutive segments.
  int direction_switches() const;
};

/// Endpoint of the canonical clothoid that starts at the origin pose with
/// zero curvature and runs until curvature reaches kappa_target under
/// sharpness sigma. Requires sigma != 0 and sign(sigma) == sign(kappa_target).
Pose clothoid_endpoint(double sigma, double kappa_target);

/// Poses sampled every ds along a segment; the final point is always
/// included. Pairs are (arc length, pose).
std::vector<std::pair<double, Pose>> sample_segment(const PathSegment & seg, double ds);

/// Poses sampled every ds along a path, including all joints and endpoints.
std::vector<std::pair<double, Pose>> sample_path(const Path & path, double ds);

inline double path_length(const Path & p) { return p.length(); }

/// (s, kappa) pairs along the path at step ds, joints included.
std::vector<std::pair<double, double>> path_curvature_profile(const Path & p, double ds);

/// Sub-path covering arc lengths [0, s_cut]; the segment containing the cut
/// is shortened. s_cut beyond the total length returns the whole path.
Path truncate_path(const Path & p, double s_cut);

/// The same geometric curve traversed the other way: segment order flips,
/// each segment's curvature law is mirrored and its sign negated, and every
/// driving direction is inverted.
Path reverse_path(const Path & p);

struct PathCheckOptions {
  double joint_pos_tol{1.0e-9};
  double joint_angle_tol{1.0e-9};
  double kappa_tol{1.0e-9};
  double delta_kappa_tol{1.0e-6};
  double sample_ds{0.05};
};

struct PathCheckResult {
  bool ok{true};
  std::string violation;  // empty when ok
};

/// Structural validity: joint continuity (curvature jumps allowed only at
/// direction switches), curvature magnitude within kappa_max, and a sampled
/// |d kappa| <= sigma_max * ds scan within each driving-direction run.
PathCheckResult check_path(const Path & p, const VehicleParams & params,
                           const PathCheckOptions & opt = {});

}  // namespace ccpark

#endif  // CCPARK_PATH_HPP
