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

#include "ccpark/target_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccpark {

namespace {

constexpr double kCollisionStep = 0.10;

/// Longest prefix of the segment whose ds-sampled poses are all free.
/// Truncates to the sampling grid so every retained sample stays free.
std::pair<double, bool> free_prefix_length(const CollisionChecker & env,
                                           const VehicleParams & params, const PathSegment & seg,
                                           double ds)
{
  const auto samples = sample_segment(seg, ds);
  double last_free = -1.0;
  for (const auto & [s, pose] : samples) {
    if (!env.pose_free(params, pose)) {
      return {std::max(last_free, 0.0), true};
    }
    last_free = s;
  }
  return {seg.length, false};
}

/// Append `seg` truncated at the first collision. Returns true when the
/// branch may continue (the full segment fit).
bool append_truncated(Path & path, const CollisionChecker & env, const VehicleParams & params,
                      PathSegment seg, double ds, bool & truncated)
{
  const auto [len, cut] = free_prefix_length(env, params, seg, ds);
  seg.length = len;
  if (len > 1.0e-12) {
    path.append(seg);
  }
  truncated = truncated || cut;
  return !cut;
}

struct SweepSpec {
  double value;     // sharpness (continuous) or curvature (arc-only)
  bool straight;    // the pure-straight branch
};

std::vector<SweepSpec> sweep_values(const VehicleParams & params, const TargetTreeConfig & cfg)
{
  std::vector<SweepSpec> out;
  const int n = cfg.n_branches_per_side;
  const double limit = cfg.continuous ? params.sigma_max : params.kappa_max;
  for (int j = n; j >= 1; --j) {
    out.push_back({limit * j / n, false});
  }
  out.push_back({0.0, true});
  for (int j = 1; j <= n; ++j) {
    out.push_back({-limit * j / n, false});
  }
  return out;
}

/// Turning part of one branch grown from `from` (curvature zero there).
/// Continuous mode: clothoid to saturation then arc; arc-only mode: a single
/// constant-curvature arc. The heading budget caps the total deflection.
void append_turning_part(Path & path, const Pose & from, double value, bool continuous,
                         const CollisionChecker & env, const VehicleParams & params,
                         const TargetTreeConfig & cfg, double ds, bool & truncated)
{
  const double sgn = value > 0.0 ? 1.0 : -1.0;
  Pose pose = from;
  if (continuous) {
    const double theta_cl = 0.5 * params.kappa_max * params.kappa_max / std::abs(value);
    double clothoid_len;
    bool saturates;
    if (theta_cl <= cfg.max_turn_angle) {
      clothoid_len = params.kappa_max / std::abs(value);
      saturates = true;
    } else {
      clothoid_len = std::sqrt(2.0 * cfg.max_turn_angle / std::abs(value));
      saturates = false;
    }
    PathSegment clothoid = make_clothoid(pose, 0.0, value, clothoid_len, Direction::Forward);
    if (!append_truncated(path, env, params, clothoid, ds, truncated)) {
      return;
    }
    pose = clothoid.end_pose();
    if (saturates) {
      const double arc_angle = cfg.max_turn_angle - theta_cl;
      if (arc_angle > 1.0e-12) {
        PathSegment arc = make_arc(pose, sgn * params.kappa_max, arc_angle / params.kappa_max,
                                   Direction::Forward);
        append_truncated(path, env, params, arc, ds, truncated);
      }
    }
  } else {
    PathSegment arc =
        make_arc(pose, value, cfg.max_turn_angle / std::abs(value), Direction::Forward);
    append_truncated(path, env, params, arc, ds, truncated);
  }
}

void discretize_candidates(TargetTree & tree, double goal_ds)
{
  auto near_existing = [&](const Pose & p) {
    for (const auto & c : tree.candidate_goals) {
      if (std::abs(c.pose.x - p.x) < 1.0e-9 && std::abs(c.pose.y - p.y) < 1.0e-9 &&
          std::abs(angle_diff(c.pose.theta, p.theta)) < 1.0e-9 &&
          std::abs(c.pose.kappa - p.kappa) < 1.0e-9) {
        return true;
      }
    }
    return false;
  };
  for (int b = 0; b < static_cast<int>(tree.branches.size()); ++b) {
    const Path & path = tree.branches[b].path;
    const double total = path.length();
    std::vector<double> stations;
    for (double s = 0.0; s < total; s += goal_ds) {
      stations.push_back(s);
    }
    stations.push_back(total);
    for (double s : stations) {
      CandidateGoal c;
      c.pose = path.empty() ? tree.goal : path.pose_at(s);
      c.remaining_length = s;
      c.branch_id = b;
      c.branch_direction = path.empty() ? Direction::Forward : path.direction_at(s);
      if (!near_existing(c.pose)) {
        tree.candidate_goals.push_back(c);
      }
    }
  }
}

void finish_branch(TargetTree & tree, TargetBranch && branch, double prefix_length)
{
  branch.tip = branch.path.empty() ? tree.goal : branch.path.end_pose();
  const double beyond = branch.path.length() - prefix_length;
  branch.reaches_turning = beyond > 1.0e-9;
  if (branch.reaches_turning) {
    const Pose local = relative_to(tree.frame, branch.tip);
    branch.tip_local = {local.x, local.y};
  } else {
    branch.tip_local = {0.0, 0.0};
  }
  tree.branches.push_back(std::move(branch));
}

void grow_sweep(TargetTree & tree, const Path & prefix, const CollisionChecker & env,
                const VehicleParams & params, const TargetTreeConfig & cfg, bool prefix_truncated,
                double straight_extension, double ds)
{
  const Pose sweep_from = prefix.empty() ? tree.goal : prefix.end_pose();
  for (const SweepSpec & spec : sweep_values(params, cfg)) {
    if (prefix_truncated && !spec.straight) {
      continue;  // blocked exit: keep only the (possibly empty) straight branch
    }
    TargetBranch branch;
    branch.sweep_value = spec.value;
    branch.path = prefix;
    branch.truncated_by_collision = prefix_truncated;
    if (!prefix_truncated) {
      if (spec.straight) {
        PathSegment ext = make_straight(sweep_from, straight_extension, Direction::Forward);
        append_truncated(branch.path, env, params, ext, ds, branch.truncated_by_collision);
      } else {
        append_turning_part(branch.path, sweep_from, spec.value, cfg.continuous, env, params, cfg,
                            ds, branch.truncated_by_collision);
      }
    }
    finish_branch(tree, std::move(branch), prefix.length());
  }
}

}  // namespace

std::pair<double, double> compute_reference_extents(const VehicleParams & params,
                                                    const TargetTreeConfig & cfg)
{
  const BoundsRect huge{-1.0e6, -1.0e6, 1.0e6, 1.0e6};
  const CollisionChecker empty_env(huge, {});
  double max_x = 0.0;
  double max_y = 0.0;
  for (const SweepSpec & spec : sweep_values(params, cfg)) {
    if (spec.straight || spec.value < 0.0) {
      continue;
    }
    Path path;
    bool truncated = false;
    append_turning_part(path, Pose{}, spec.value, cfg.continuous, empty_env, params, cfg,
                        kCollisionStep, truncated);
    if (path.empty()) {
      continue;
    }
    const Pose tip = path.end_pose();
    max_x = std::max(max_x, std::abs(tip.x));
    max_y = std::max(max_y, std::abs(tip.y));
  }
  return {max_x, max_y};
}

TargetTree build_perpendicular_tree(const Pose & q_goal, double straight_l,
                                    const CollisionChecker & env, const VehicleParams & params,
                                    const TargetTreeConfig & cfg)
{
  TargetTree tree;
  tree.mode = SpotMode::Perpendicular;
  tree.goal = q_goal;
  tree.straight_length_l = straight_l;

  Path prefix;
  bool prefix_truncated = false;
  if (straight_l > 1.0e-12) {
    PathSegment straight = make_straight(q_goal, straight_l, Direction::Forward);
    append_truncated(prefix, env, params, straight, kCollisionStep, prefix_truncated);
  } else if (!env.pose_free(params, q_goal)) {
    prefix_truncated = true;
  }
  tree.frame = prefix.empty() ? q_goal : prefix.end_pose();
  tree.frame.kappa = 0.0;

  const auto [l_max, w_max] = compute_reference_extents(params, cfg);
  grow_sweep(tree, prefix, env, params, cfg, prefix_truncated, l_max, kCollisionStep);
  discretize_candidates(tree, cfg.goal_ds);
  tree.cost = tree_cost(tree, l_max, w_max);
  return tree;
}

TargetTree build_parallel_tree(const Pose & q_goal, double straight_l, const ParkingSpot & spot,
                               const CollisionChecker & env, const VehicleParams & params,
                               const TargetTreeConfig & cfg)
{
  if (spot.length < params.body_length + 2.0 * cfg.clearance_margin) {
    throw InfeasibleSpot("parking spot shorter than vehicle plus clearance margins");
  }

  TargetTree tree;
  tree.mode = SpotMode::Parallel;
  tree.goal = q_goal;
  tree.straight_length_l = straight_l;

  // In-spot maneuvering keeps clearance_margin to the surrounding obstacles.
  const CollisionChecker margin_env(env.bounds(), env.obstacles(), 1.0, cfg.clearance_margin);

  Path prefix;
  bool blocked = false;
  Pose pose = q_goal;
  if (straight_l > 1.0e-12) {
    PathSegment straight = make_straight(pose, straight_l, Direction::Forward);
    append_truncated(prefix, margin_env, params, straight, kCollisionStep, blocked);
    pose = prefix.empty() ? pose : prefix.end_pose();
  }

  const double kappa = (cfg.parallel_exit_left ? 1.0 : -1.0) * params.kappa_max;
  const double phase_angle_cap = M_PI_2;
  const double ramp_len = params.kappa_max / params.sigma_max;
  bool exited = false;
  Pose exit_pose;

  for (int pair = 0; pair < cfg.max_arc_pairs && !exited; ++pair) {
    // Backward arc toward the rear obstacle.
    {
      PathSegment arc =
          make_arc(pose, kappa, phase_angle_cap / params.kappa_max, Direction::Backward);
      const auto [len, cut] = free_prefix_length(margin_env, params, arc, kCollisionStep);
      arc.length = len;
      if (len > 1.0e-12) {
        prefix.append(arc);
        pose = arc.end_pose();
      }
      (void)cut;
    }
    // Forward arc toward the front obstacle, probing for the spot exit.
    {
      PathSegment arc =
          make_arc(pose, kappa, phase_angle_cap / params.kappa_max, Direction::Forward);
      const auto [len, cut] = free_prefix_length(margin_env, params, arc, kCollisionStep);
      (void)cut;
      // Exit probe: curvature ramp-down plus a straight run-out. Only when
      // both are free has the turning vehicle actually cleared the spot.
      const double run_out = 3.0;
      const int steps = static_cast<int>(std::floor(len / kCollisionStep + 1.0e-12));
      for (int i = 0; i <= steps; ++i) {
        const double s = std::min(i * kCollisionStep, len);
        const Pose probe_from = arc.pose_at(s);
        Path probe;
        if (cfg.continuous) {
          probe.append(make_clothoid(probe_from, kappa, -std::copysign(params.sigma_max, kappa),
                                     ramp_len, Direction::Forward));
          probe.append(make_straight(probe.end_pose(), run_out, Direction::Forward));
        } else {
          Pose flat = probe_from;
          flat.kappa = 0.0;
          probe.append(make_straight(flat, ramp_len + run_out, Direction::Forward));
        }
        if (env.path_free(params, probe, kCollisionStep)) {
          PathSegment placed = arc;
          placed.length = s;
          if (s > 1.0e-12) {
            prefix.append(placed);
          }
          if (cfg.continuous) {
            prefix.append(probe.segments.front());
            exit_pose = probe.segments.front().end_pose();
          } else {
            // Arc-only mode: the sweep continues straight off the full-lock
            // arc; the curvature steps down at the joint.
            exit_pose = probe_from;
          }
          exit_pose.kappa = 0.0;
          exited = true;
          break;
        }
      }
      if (!exited && len > 1.0e-12) {
        PathSegment placed = arc;
        placed.length = len;
        prefix.append(placed);
        pose = placed.end_pose();
      }
    }
  }
  if (!exited) {
    throw InfeasibleSpot("arc-pair budget exhausted before the vehicle could leave the spot");
  }

  tree.frame = exit_pose;
  const auto [l_max, w_max] = compute_reference_extents(params, cfg);
  grow_sweep(tree, prefix, env, params, cfg, false, l_max, kCollisionStep);
  discretize_candidates(tree, cfg.goal_ds);
  tree.cost = tree_cost(tree, l_max, w_max);
  return tree;
}

double tree_cost(const TargetTree & tree, double l_max, double w_max)
{
  if (l_max <= 0.0 || w_max <= 0.0) {
    return 1.0;
  }
  double left_x = 0.0, left_y = 0.0, right_x = 0.0, right_y = 0.0;
  bool any_left = false, any_right = false;
  for (const auto & branch : tree.branches) {
    if (!branch.reaches_turning) {
      continue;
    }
    const double ax = std::abs(branch.tip_local.x);
    const double ay = std::abs(branch.tip_local.y);
    const bool on_axis = std::abs(branch.tip_local.y) < 1.0e-9;
    if (branch.tip_local.y > 0.0 || on_axis) {
      left_x = std::max(left_x, ax);
      left_y = std::max(left_y, ay);
      any_left = true;
    }
    if (branch.tip_local.y < 0.0 || on_axis) {
      right_x = std::max(right_x, ax);
      right_y = std::max(right_y, ay);
      any_right = true;
    }
  }
  const double area_left = any_left ? left_x * left_y : 0.0;
  const double area_right = any_right ? right_x * right_y : 0.0;
  const double cost = 1.0 - (area_left + area_right) / (2.0 * l_max * w_max);
  return std::clamp(cost, 0.0, 1.0);
}

TargetTree initialize_target_tree(const Pose & q_goal, const ParkingSpot & spot,
                                  const CollisionChecker & env, const VehicleParams & params,
                                  const TargetTreeConfig & cfg)
{
  TargetTree best;
  bool have_best = false;
  std::string last_error;
  for (double l = 0.0; l <= spot.length + 1.0e-9; l += cfg.alpha) {
    TargetTree tree;
    if (spot.mode == SpotMode::Perpendicular) {
      tree = build_perpendicular_tree(q_goal, l, env, params, cfg);
    } else {
      try {
        tree = build_parallel_tree(q_goal, l, spot, env, params, cfg);
      } catch (const InfeasibleSpot & e) {
        last_error = e.what();
        continue;
      }
    }
    if (!have_best || tree.cost < best.cost) {
      best = std::move(tree);
      have_best = true;
    }
  }
  if (!have_best) {
    throw InfeasibleSpot(last_error.empty() ? "no feasible target tree" : last_error);
  }
  return best;
}

Path parking_suffix(const TargetTree & tree, const CandidateGoal & goal)
{
  const Path & branch = tree.branches[static_cast<std::size_t>(goal.branch_id)].path;
  Path suffix = reverse_path(truncate_path(branch, goal.remaining_length));
  for (auto & seg : suffix.segments) {
    seg.on_target_tree = true;
  }
  return suffix;
}

}  // namespace ccpark
