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

#ifndef CCPARK_PLANNER_CONFIG_HPP
#define CCPARK_PLANNER_CONFIG_HPP

#include <cmath>
#include <optional>
#include <stdexcept>

namespace ccpark {

/// Target-tree construction parameters.
struct TargetTreeConfig {
  int n_branches_per_side{9};
  double goal_ds{0.5};             // candidate-goal spacing along branches, m
  double max_turn_angle{M_PI_2};   // heading budget of the turning part, rad
  double clearance_margin{0.10};   // parallel-mode obstacle margin, m
  int max_arc_pairs{10};
  double alpha{0.2};               // straight-length sweep interval, m
  bool parallel_exit_left{true};
  bool continuous{true};           // false: straight+arc branches (no clothoid)
};

/// Planner parameters. Exactly one of t_max / iter_max governs the budget:
/// wall-clock for benchmarks, iterations for deterministic runs.
struct PlannerConfig {
  std::optional<double> t_max;       // seconds
  std::optional<long> iter_max;      // iterations
  double tau{0.2};                   // target-tree sample bias
  double steer_step{3.0};            // max extension length, m
  double rewire_gamma{15.0};         // near-radius scale, m
  double near_radius_max{6.0};       // m
  double ds_col{0.10};               // collision sampling step, m
  double w_xy{1.0};                  // nearest-metric position weight
  double w_theta{1.0};               // nearest-metric heading weight, m/rad
  double obstacle_margin{0.0};       // uniform safety inflation, m
  double grid_cell{1.0};             // collision-index cell size, m
  TargetTreeConfig tree;

  void validate() const
  {
    if (tau < 0.0 || tau > 1.0) {
      throw std::invalid_argument("planner.tau must lie in [0, 1]");
    }
    if (steer_step <= 0.0 || rewire_gamma <= 0.0 || near_radius_max <= 0.0 || ds_col <= 0.0 ||
        grid_cell <= 0.0) {
      throw std::invalid_argument("planner lengths must be positive");
    }
    if (tree.alpha <= 0.0 || tree.goal_ds <= 0.0) {
      throw std::invalid_argument("planner.alpha and planner.goal_ds must be positive");
    }
    if (tree.n_branches_per_side < 1 || tree.max_arc_pairs < 1) {
      throw std::invalid_argument("planner branch/arc-pair counts must be at least 1");
    }
    if (t_max.has_value() == iter_max.has_value()) {
      throw std::invalid_argument("exactly one of planner.t_max and planner.iter_max must be set");
    }
  }
};

}  // namespace ccpark

#endif  // CCPARK_PLANNER_CONFIG_HPP
