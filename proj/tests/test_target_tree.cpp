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

#include "ccpark/target_tree.hpp"

using namespace ccpark;

namespace {

CollisionChecker open_env()
{
  return CollisionChecker(BoundsRect{-100.0, -100.0, 100.0, 100.0}, {});
}

const Pose kGoal{0.0, 0.0, M_PI_2, 0.0};

}  // namespace

TEST_CASE("perpendicular tree in the open: branch census and leftmost structure")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const CollisionChecker env = open_env();
  const TargetTree tree = build_perpendicular_tree(kGoal, 2.0, env, vp, cfg);

  CHECK(tree.branches.size() == 2 * cfg.n_branches_per_side + 1);
  CHECK(tree.mode == SpotMode::Perpendicular);

  const TargetBranch & leftmost = tree.branches.front();
  CHECK(leftmost.sweep_value == doctest::Approx(vp.sigma_max));
  REQUIRE(leftmost.path.segments.size() == 3);
  CHECK(leftmost.path.segments[0].kind == SegmentKind::Straight);
  CHECK(leftmost.path.segments[0].length == doctest::Approx(2.0));
  CHECK(leftmost.path.segments[1].kind == SegmentKind::Clothoid);
  CHECK(leftmost.path.segments[1].length == doctest::Approx(5.0 / 6.0));
  CHECK(leftmost.path.segments[1].end_kappa() == doctest::Approx(vp.kappa_max));
  CHECK(leftmost.path.segments[2].kind == SegmentKind::Arc);
  CHECK(leftmost.path.segments[2].start_kappa == doctest::Approx(vp.kappa_max));
  // Arc capped at the heading budget.
  const double theta_cl = 0.5 * vp.kappa_max * vp.kappa_max / vp.sigma_max;
  CHECK(leftmost.path.segments[2].length ==
        doctest::Approx((cfg.max_turn_angle - theta_cl) / vp.kappa_max));
  CHECK_FALSE(leftmost.truncated_by_collision);
  // Every branch starts at the goal.
  for (const auto & b : tree.branches) {
    CHECK(b.path.start_pose().x == doctest::Approx(kGoal.x));
    CHECK(b.path.start_pose().y == doctest::Approx(kGoal.y));
  }
}

TEST_CASE("perpendicular tree with zero straight starts turning at the goal")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const TargetTree tree = build_perpendicular_tree(kGoal, 0.0, open_env(), vp, cfg);
  CHECK(tree.branches.front().path.segments.front().kind == SegmentKind::Clothoid);
}

TEST_CASE("blocked spot exit truncates everything")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  // Wall right across the exit.
  const ConvexPolygon wall{{-6.0, 4.2}, {6.0, 4.2}, {6.0, 5.2}, {-6.0, 5.2}};
  const CollisionChecker env(BoundsRect{-50.0, -50.0, 50.0, 50.0}, {wall});
  const TargetTree tree = build_perpendicular_tree(kGoal, 2.0, env, vp, cfg);
  for (const auto & b : tree.branches) {
    CHECK(b.truncated_by_collision);
  }
  CHECK(tree.cost == doctest::Approx(1.0));
}

TEST_CASE("branches pass the curvature validator and candidates are free")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const ConvexPolygon box{{4.0, 4.0}, {9.0, 4.0}, {9.0, 7.0}, {4.0, 7.0}};
  const CollisionChecker env(BoundsRect{-50.0, -50.0, 50.0, 50.0}, {box});
  const TargetTree tree = build_perpendicular_tree(kGoal, 1.0, env, vp, cfg);
  for (const auto & b : tree.branches) {
    if (b.path.empty()) {
      continue;
    }
    const auto res = check_path(b.path, vp);
    CAPTURE(res.violation);
    CHECK(res.ok);
  }
  for (const auto & c : tree.candidate_goals) {
    CHECK(env.pose_free(vp, c.pose));
  }
}

TEST_CASE("candidate remaining lengths increase along each branch")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const TargetTree tree = build_perpendicular_tree(kGoal, 1.5, open_env(), vp, cfg);
  CHECK(!tree.candidate_goals.empty());
  std::vector<double> last_remaining(tree.branches.size(), -1.0);
  for (const auto & c : tree.candidate_goals) {
    CHECK(c.remaining_length >
          last_remaining[static_cast<std::size_t>(c.branch_id)] - 1.0e-12);
    last_remaining[static_cast<std::size_t>(c.branch_id)] = c.remaining_length;
  }
}

TEST_CASE("tree cost exact cases")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const auto [l_max, w_max] = compute_reference_extents(vp, cfg);
  CHECK(l_max > 0.0);
  CHECK(w_max > 0.0);

  // Unobstructed: full coverage on both sides.
  TargetTree open_tree = build_perpendicular_tree(kGoal, 2.0, open_env(), vp, cfg);
  CHECK(std::abs(open_tree.cost - 0.0) <= 1.0e-12);

  // One side cleared: exactly half the coverage.
  TargetTree half = open_tree;
  for (auto & b : half.branches) {
    if (b.tip_local.y < -1.0e-9) {
      b.reaches_turning = false;
      b.tip_local = {0.0, 0.0};
    }
  }
  CHECK(std::abs(tree_cost(half, l_max, w_max) - 0.5) <= 1.0e-12);

  // Everything truncated at the straight's end.
  TargetTree none = open_tree;
  for (auto & b : none.branches) {
    b.reaches_turning = false;
    b.tip_local = {0.0, 0.0};
  }
  CHECK(std::abs(tree_cost(none, l_max, w_max) - 1.0) <= 1.0e-12);
}

TEST_CASE("reference extents behave with the turn budget and radius")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  cfg.max_turn_angle = 1.0e-4;
  const auto [l_small, w_small] = compute_reference_extents(vp, cfg);
  CHECK(w_small <= 1.0e-3);

  // Arc-dominated regime: halving kappa_max roughly doubles both extents.
  VehicleParams tight = vp;
  tight.sigma_max = 5.0;
  VehicleParams wide = tight;
  wide.kappa_max = tight.kappa_max / 2.0;
  TargetTreeConfig cfg2;
  const auto [l1, w1] = compute_reference_extents(tight, cfg2);
  const auto [l2, w2] = compute_reference_extents(wide, cfg2);
  CHECK(l2 / l1 == doctest::Approx(2.0).epsilon(0.05));
  CHECK(w2 / w1 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("minimum-cost tree selection")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  ParkingSpot spot;
  spot.goal = kGoal;
  spot.length = 5.3;
  spot.width = 2.6;
  spot.mode = SpotMode::Perpendicular;

  // Open environment: all straights tie at cost 0, shortest wins.
  const TargetTree best = initialize_target_tree(kGoal, spot, open_env(), vp, cfg);
  CHECK(best.straight_length_l == 0.0);
  CHECK(best.cost <= 1.0e-12);

  // With the interval equal to the spot length only l = 0 and l = l_parking
  // are evaluated.
  TargetTreeConfig coarse = cfg;
  coarse.alpha = spot.length;
  const TargetTree coarse_best = initialize_target_tree(kGoal, spot, open_env(), vp, coarse);
  CHECK((coarse_best.straight_length_l == 0.0 ||
         coarse_best.straight_length_l == doctest::Approx(spot.length)));
  CHECK(coarse_best.straight_length_l == 0.0);  // tie-break toward shorter
}

TEST_CASE("blocked turn-out favors an extended straight")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  // A parked vehicle blocks the short turn-out region on one side.
  const ConvexPolygon blocker{{-7.1, 3.92}, {-2.2, 3.92}, {-2.2, 5.78}, {-7.1, 5.78}};
  const ConvexPolygon row_left{{-20.0, -1.2}, {-1.3, -1.2}, {-1.3, 3.88}, {-20.0, 3.88}};
  const ConvexPolygon row_right{{1.3, -1.2}, {20.0, -1.2}, {20.0, 3.88}, {1.3, 3.88}};
  const CollisionChecker env(BoundsRect{-20.0, -2.0, 20.0, 14.0},
                             {blocker, row_left, row_right});
  ParkingSpot spot;
  spot.goal = kGoal;
  spot.length = 5.3;
  spot.width = 2.6;
  spot.mode = SpotMode::Perpendicular;

  const TargetTree l0 = build_perpendicular_tree(kGoal, 0.0, env, vp, cfg);
  const TargetTree best = initialize_target_tree(kGoal, spot, env, vp, cfg);
  CHECK(best.straight_length_l > 0.0);
  CHECK(best.cost < l0.cost);
}

TEST_CASE("parallel tree: arc pairs, exit ramp, infeasible spot")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const Pose goal{0.0, 0.0, 0.0, 0.0};

  auto make_env = [&](double slack) {
    // Parked cars ahead and behind with the given longitudinal slack each.
    const double rear_x = -vp.rear_overhang - slack;
    const double front_x = vp.body_length - vp.rear_overhang + slack;
    std::vector<ConvexPolygon> obstacles{
        {{rear_x - 6.0, -1.0}, {rear_x, -1.0}, {rear_x, 0.93}, {rear_x - 6.0, 0.93}},
        {{front_x, -1.0}, {front_x + 6.0, -1.0}, {front_x + 6.0, 0.93}, {front_x, 0.93}}};
    return CollisionChecker(BoundsRect{-25.0, -1.1, 25.0, 25.0}, obstacles);
  };
  auto spot_for = [&](double slack) {
    ParkingSpot spot;
    spot.goal = goal;
    spot.length = vp.body_length + 2.0 * slack;
    spot.width = 2.0;
    spot.mode = SpotMode::Parallel;
    return spot;
  };

  // Generous slack: one backward/forward pair suffices.
  {
    const auto env = make_env(1.0);
    const TargetTree tree = build_parallel_tree(goal, 0.0, spot_for(1.0), env, vp, cfg);
    int arcs_before_ramp = 0;
    for (const auto & seg : tree.branches.front().path.segments) {
      if (seg.kind == SegmentKind::Arc && std::abs(seg.start_kappa) ==
                                              doctest::Approx(vp.kappa_max)) {
        ++arcs_before_ramp;
      } else if (seg.kind == SegmentKind::Clothoid) {
        break;
      }
    }
    CHECK(arcs_before_ramp == 2);
    const auto res = check_path(tree.branches.front().path, vp);
    CAPTURE(res.violation);
    CHECK(res.ok);
  }

  // Tight slack: more shuffling needed.
  {
    const auto env = make_env(0.45);
    const TargetTree tree = build_parallel_tree(goal, 0.0, spot_for(0.45), env, vp, cfg);
    int arcs = 0;
    for (const auto & seg : tree.branches.front().path.segments) {
      if (seg.kind == SegmentKind::Clothoid) {
        break;
      }
      if (seg.kind == SegmentKind::Arc) {
        ++arcs;
      }
    }
    CHECK(arcs >= 4);
  }

  // Spot shorter than the body plus margins.
  CHECK_THROWS_AS(
      build_parallel_tree(goal, 0.0, spot_for(0.05), make_env(0.05), vp, cfg),
      InfeasibleSpot);
}

TEST_CASE("parallel switch poses hold the clearance margin")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const Pose goal{0.0, 0.0, 0.0, 0.0};
  const double slack = 0.8;
  const double rear_x = -vp.rear_overhang - slack;
  const double front_x = vp.body_length - vp.rear_overhang + slack;
  std::vector<ConvexPolygon> obstacles{
      {{rear_x - 6.0, -1.0}, {rear_x, -1.0}, {rear_x, 0.93}, {rear_x - 6.0, 0.93}},
      {{front_x, -1.0}, {front_x + 6.0, -1.0}, {front_x + 6.0, 0.93}, {front_x, 0.93}}};
  const CollisionChecker env(BoundsRect{-25.0, -1.1, 25.0, 25.0}, obstacles);
  ParkingSpot spot;
  spot.goal = goal;
  spot.length = vp.body_length + 2.0 * slack;
  spot.width = 2.0;
  spot.mode = SpotMode::Parallel;
  const TargetTree tree = build_parallel_tree(goal, 0.0, spot, env, vp, cfg);
  const Path & branch = tree.branches.front().path;
  for (std::size_t i = 1; i < branch.segments.size(); ++i) {
    if (branch.segments[i].direction != branch.segments[i - 1].direction &&
        branch.segments[i - 1].kind == SegmentKind::Arc) {
      const double clearance = env.footprint_clearance(vp, branch.segments[i].start_pose);
      CHECK(clearance >= cfg.clearance_margin - 1.0e-9);
      CHECK(clearance <= cfg.clearance_margin + 0.25);
    }
  }
}

TEST_CASE("arc-only sweep violates the curvature validator")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  cfg.continuous = false;
  const TargetTree tree = build_perpendicular_tree(kGoal, 1.0, open_env(), vp, cfg);
  bool any_flagged = false;
  for (const auto & b : tree.branches) {
    if (!b.path.empty() && !check_path(b.path, vp).ok) {
      any_flagged = true;
    }
  }
  CHECK(any_flagged);
}

TEST_CASE("parking suffix reverses the branch below a candidate")
{
  VehicleParams vp;
  TargetTreeConfig cfg;
  const TargetTree tree = build_perpendicular_tree(kGoal, 1.5, open_env(), vp, cfg);
  const CandidateGoal & cand = tree.candidate_goals.back();
  const Path suffix = parking_suffix(tree, cand);
  CHECK(suffix.length() == doctest::Approx(cand.remaining_length));
  const Pose end = suffix.end_pose();
  CHECK(std::abs(end.x - kGoal.x) <= 1.0e-9);
  CHECK(std::abs(end.y - kGoal.y) <= 1.0e-9);
  CHECK(std::abs(angle_diff(end.theta, kGoal.theta)) <= 1.0e-9);
  for (const auto & seg : suffix.segments) {
    CHECK(seg.on_target_tree);
  }
}
