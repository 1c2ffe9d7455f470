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

#include <random>
#include <set>

#include "ccpark/io.hpp"
#include "ccpark/planner.hpp"

using namespace ccpark;

namespace {

std::string scenario_dir() { return CCPARK_SCENARIO_DIR; }

Scenario empty_scenario(long iters = 800)
{
  Scenario scn = load_scenario_file(scenario_dir() + "/empty.scn");
  scn.planner.iter_max = iters;
  return scn;
}

}  // namespace

TEST_CASE("sample: bias extremes and frequency")
{
  Scenario scn = empty_scenario();
  const CollisionChecker env = CollisionChecker::for_scenario(scn);
  const TargetTree target =
      initialize_target_tree(scn.spot.goal, scn.spot, env, scn.vehicle, scn.planner.tree);

  SUBCASE("tau = 1 always draws a candidate goal")
  {
    scn.planner.tau = 1.0;
    RrtPlanner planner(scn, target, env);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
      CHECK(planner.sample(rng).candidate >= 0);
    }
  }
  SUBCASE("tau = 0 never draws a candidate goal")
  {
    scn.planner.tau = 0.0;
    RrtPlanner planner(scn, target, env);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
      CHECK(planner.sample(rng).candidate < 0);
    }
  }
  SUBCASE("tau = 0.2 hits candidates at the expected rate")
  {
    scn.planner.tau = 0.2;
    RrtPlanner planner(scn, target, env);
    std::mt19937_64 rng(3);
    long hits = 0;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) {
      if (planner.sample(rng).candidate >= 0) {
        ++hits;
      }
    }
    const double rate = static_cast<double>(hits) / draws;
    CHECK(rate >= 0.19);
    CHECK(rate <= 0.21);
  }
  SUBCASE("uniform samples stay inside bounds with zero curvature")
  {
    scn.planner.tau = 0.0;
    RrtPlanner planner(scn, target, env);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
      const auto s = planner.sample(rng);
      CHECK(scn.bounds.contains(s.pose.position()));
      CHECK(s.pose.kappa == 0.0);
      CHECK(s.pose.theta > -M_PI);
      CHECK(s.pose.theta <= M_PI);
    }
  }
}

TEST_CASE("nearest: trivial cases and brute-force agreement")
{
  const BoundsRect bounds{0.0, 0.0, 30.0, 30.0};
  PlannerTree tree(Pose{5.0, 5.0, 0.0, 0.0}, bounds, 1.0, 1.0);
  CHECK(tree.nearest(Pose{20.0, 20.0, 1.0, 0.0}) == 0);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 30.0);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int i = 0; i < 1000; ++i) {
    tree.insert(Pose{uni(rng), uni(rng), ang(rng), 0.0}, 0, Path{}, 1.0);
  }
  // A query equal to an existing node pose returns that node.
  const Pose existing = tree.node(321).pose;
  CHECK(tree.nearest(existing) == 321);
  for (int q = 0; q < 10000; ++q) {
    const Pose query{uni(rng), uni(rng), ang(rng), 0.0};
    CHECK(tree.nearest(query) == tree.nearest_brute(query));
  }
}

TEST_CASE("extend: basic insertion and obstacle rejection")
{
  Scenario scn = empty_scenario();
  scn.start = Pose{15.0, 20.0, 0.0, 0.0};

  SUBCASE("one meter ahead inserts exactly there with unit cost")
  {
    const CollisionChecker env = CollisionChecker::for_scenario(scn);
    const TargetTree target =
        initialize_target_tree(scn.spot.goal, scn.spot, env, scn.vehicle, scn.planner.tree);
    RrtPlanner planner(scn, target, env);
    RrtPlanner::Sample s;
    s.pose = Pose{16.0, 20.0, 0.0, 0.0};
    const auto res = planner.extend(s);
    REQUIRE(res.node == 1);
    const PlannerNode & node = planner.tree().node(1);
    CHECK(node.pose.x == doctest::Approx(16.0));
    CHECK(node.cost_from_root == doctest::Approx(1.0));
    CHECK(node.parent == 0);
  }

  SUBCASE("a sample buried in an adjacent obstacle makes no progress")
  {
    scn.obstacles.push_back({{16.5, 18.0}, {23.0, 18.0}, {23.0, 22.0}, {16.5, 22.0}});
    const CollisionChecker env = CollisionChecker::for_scenario(scn);
    const TargetTree target =
        initialize_target_tree(scn.spot.goal, scn.spot, env, scn.vehicle, scn.planner.tree);
    RrtPlanner planner(scn, target, env);
    RrtPlanner::Sample s;
    s.pose = Pose{19.0, 20.0, 0.0, 0.0};
    const auto res = planner.extend(s);
    CHECK(res.node == -1);
  }
}

TEST_CASE("tree costs stay consistent through rewiring")
{
  Scenario scn = empty_scenario(2000);
  scn.seed = 9;
  const CollisionChecker env = CollisionChecker::for_scenario(scn);
  const TargetTree target =
      initialize_target_tree(scn.spot.goal, scn.spot, env, scn.vehicle, scn.planner.tree);
  RrtPlanner planner(scn, target, env);
  std::mt19937_64 rng(scn.seed);
  for (long i = 0; i < 2000; ++i) {
    planner.extend(planner.sample(rng));
  }
  CHECK(planner.tree().size() > 500);
  CHECK(planner.tree().acyclic());
  CHECK(planner.tree().max_cost_error() <= 1.0e-9);
}

TEST_CASE("plan: start already on a candidate goal")
{
  Scenario scn = empty_scenario(50);
  // Place the start exactly on the goal pose (a candidate with zero
  // remaining length).
  scn.start = scn.spot.goal;
  const PlanResult res = plan(scn);
  REQUIRE(res.found());
  CHECK(res.stats.iter_ttfp == 0);
  CHECK(res.stats.t_ttfp_s <= 0.05);
  CHECK(res.best_total_length <= 1.0e-9);
}

TEST_CASE("plan: walled-off start reports no path")
{
  Scenario scn = load_scenario_file(scenario_dir() + "/walled.scn");
  scn.planner.iter_max = 150;
  const PlanResult res = plan(scn);
  CHECK_FALSE(res.found());
  CHECK(res.stats.iterations == 150);
}

TEST_CASE("plan: deterministic, monotone, and valid output")
{
  Scenario scn = empty_scenario(700);
  scn.seed = 21;
  const PlanResult a = plan(scn);
  const PlanResult b = plan(scn);
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(path_to_csv(*a.best_path) == path_to_csv(*b.best_path));
  CHECK(a.history.size() == b.history.size());
  CHECK(a.best_total_length == b.best_total_length);

  for (std::size_t i = 1; i < a.history.size(); ++i) {
    CHECK(a.history[i].second <= a.history[i - 1].second + 1.0e-12);
  }

  const Pose start = a.best_path->start_pose();
  const Pose end = a.best_path->end_pose();
  CHECK(std::hypot(start.x - scn.start.x, start.y - scn.start.y) <= 1.0e-6);
  CHECK(std::hypot(end.x - scn.spot.goal.x, end.y - scn.spot.goal.y) <= 1.0e-6);
  CHECK(std::abs(angle_diff(end.theta, scn.spot.goal.theta)) <= 1.0e-6);
  const CollisionChecker env = CollisionChecker::for_scenario(scn);
  CHECK(env.path_free(scn.vehicle, *a.best_path, scn.planner.ds_col));
  const auto valid = check_path(*a.best_path, scn.vehicle,
                                {.joint_pos_tol = 1.0e-6, .joint_angle_tol = 1.0e-6});
  CAPTURE(valid.violation);
  CHECK(valid.ok);
}

TEST_CASE("plan: total length includes the branch suffix")
{
  Scenario scn = empty_scenario(700);
  scn.seed = 33;
  const PlanResult res = plan(scn);
  REQUIRE(res.found());
  CHECK(res.best_total_length == doctest::Approx(res.best_path->length()).epsilon(1.0e-9));
  // The executed path ends with backward target-tree segments.
  CHECK(res.best_path->segments.back().on_target_tree);
}

TEST_CASE("baseline without a target tree still solves the empty scenario")
{
  Scenario scn = empty_scenario(1500);
  scn.seed = 2;
  const PlanResult res = plan_baseline_no_tree(scn);
  CHECK(res.variant == PlanVariant::NoTreeBaseline);
  REQUIRE(res.found());
  // Single candidate: the goal itself, no suffix.
  CHECK(res.target_tree.candidate_goals.size() == 1);
  const Pose end = res.best_path->end_pose();
  CHECK(std::hypot(end.x - scn.spot.goal.x, end.y - scn.spot.goal.y) <= 1.0e-6);
}

TEST_CASE("discontinuous variant: tree is flagged, planner still plans")
{
  Scenario scn = load_scenario_file(scenario_dir() + "/perpendicular_open.scn");
  scn.planner.iter_max = 1200;
  scn.seed = 7;
  const PlanResult res = plan_discontinuous_variant(scn);
  bool any_invalid_branch = false;
  for (const auto & b : res.target_tree.branches) {
    if (!b.path.empty() && !check_path(b.path, scn.vehicle).ok) {
      any_invalid_branch = true;
    }
  }
  CHECK(any_invalid_branch);
  CHECK(res.found());
}

TEST_CASE("instrumentation fires on rewires and the tree stays sound")
{
  Scenario scn = empty_scenario(900);
  scn.seed = 4;
  long rewires = 0;
  PlanInstrumentation instr;
  instr.after_rewire = [&](const PlannerTree & tree, long) {
    ++rewires;
    if (rewires % 25 == 0) {
      CHECK(tree.acyclic());
      CHECK(tree.max_cost_error() <= 1.0e-9);
    }
  };
  PlanOptions opt;
  opt.instrumentation = &instr;
  const PlanResult res = plan(scn, opt);
  CHECK(rewires > 0);
  CHECK(res.stats.iterations == 900);
}
