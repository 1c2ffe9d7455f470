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

#ifndef CCPARK_TARGET_TREE_HPP
#define CCPARK_TARGET_TREE_HPP

#include <stdexcept>
#include <vector>

#include "ccpark/environment.hpp"
#include "ccpark/path.hpp"
#include "ccpark/planner_config.hpp"

namespace ccpark {

/// The parking spot is too short for the turning radius: the in-spot arc
/// shuffle cannot rotate the vehicle out within max_arc_pairs.
struct InfeasibleSpot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One backward-parking branch: the drive-out path rooted at the goal pose.
/// Reversed, it is the final approach the vehicle executes in reverse gear.
struct TargetBranch {
  Path path;                         // starts at q_goal
  double sweep_value{0.0};           // sharpness (continuous) / curvature (arc-only); 0 = straight
  Pose tip;                          // world end pose
  Vec2 tip_local;                    // turning-part tip in the tree frame; (0,0) when blocked early
  bool reaches_turning{false};       // extends past the tree-frame origin
  bool truncated_by_collision{false};
};

struct CandidateGoal {
  Pose pose;
  double remaining_length{0.0};  // arc length back to q_goal along the branch
  int branch_id{0};
  Direction branch_direction{Direction::Forward};  // drive-out direction here
};

struct TargetTree {
  std::vector<TargetBranch> branches;
  std::vector<CandidateGoal> candidate_goals;
  double straight_length_l{0.0};
  double cost{1.0};
  SpotMode mode{SpotMode::Perpendicular};
  Pose goal;
  Pose frame;  // origin at the end of the straight (or spot exit), x out of the spot
};

/// Obstacle-free extents of the turning sweep, straight part excluded:
/// (max |x|, max |y|) of the branch tips in the tree frame. These are the
/// denominator extents of the coverage cost and the length given to the
/// pure-straight branch.
std::pair<double, double> compute_reference_extents(const VehicleParams & params,
                                                    const TargetTreeConfig & cfg);

TargetTree build_perpendicular_tree(const Pose & q_goal, double straight_l,
                                    const CollisionChecker & env, const VehicleParams & params,
                                    const TargetTreeConfig & cfg);

/// Parallel parking: alternating full-lock arcs walk the vehicle out of the
/// spot (backward toward the rear obstacle, forward toward the front), the
/// exit ramp brings curvature to zero, and the turning sweep continues from
/// there. Throws InfeasibleSpot when the spot cannot be left at kappa_max.
TargetTree build_parallel_tree(const Pose & q_goal, double straight_l, const ParkingSpot & spot,
                               const CollisionChecker & env, const VehicleParams & params,
                               const TargetTreeConfig & cfg);

/// Coverage cost: 1 - (sum of side rectangles) / (2 l_max w_max), clamped to
/// [0, 1]. Sides partition branch tips by the sign of their lateral offset;
/// tips on the axis count for both sides.
double tree_cost(const TargetTree & tree, double l_max, double w_max);

/// Straight-length sweep l = 0, alpha, 2 alpha, ..., l_parking; returns the
/// minimum-cost tree, ties broken toward the shorter straight.
TargetTree initialize_target_tree(const Pose & q_goal, const ParkingSpot & spot,
                                  const CollisionChecker & env, const VehicleParams & params,
                                  const TargetTreeConfig & cfg);

/// Executable parking suffix: the branch below the candidate, reversed.
/// Segments are tagged as target-tree portion.
Path parking_suffix(const TargetTree & tree, const CandidateGoal & goal);

}  // namespace ccpark

#endif  // CCPARK_TARGET_TREE_HPP
