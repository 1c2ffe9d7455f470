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

#ifndef CCPARK_PLANNER_HPP
#define CCPARK_PLANNER_HPP

#include <functional>
#include <limits>
#include <optional>
#include <random>

#include "ccpark/environment.hpp"
#include "ccpark/steer.hpp"
#include "ccpark/target_tree.hpp"

namespace ccpark {

struct PlannerNode {
  Pose pose;
  int parent{-1};
  Path edge;  // parent -> this
  double edge_length{0.0};
  double cost_from_root{0.0};
  std::vector<int> children;
  // Set when the node sits on a target-tree candidate: edges arriving here
  // must keep this driving direction so the parking splice stays valid.
  std::optional<Direction> arrival_constraint;
};

/// Weighted SE(2) distance used for nearest/near queries:
/// sqrt(w_xy ((dx)^2 + (dy)^2)) + w_theta |dtheta|.
double pose_metric(const Pose & a, const Pose & b, double w_xy, double w_theta);

/// RRT* node container with a uniform-grid position index.
class PlannerTree {
 public:
  PlannerTree(const Pose & root, const BoundsRect & bounds, double w_xy, double w_theta,
              double cell = 2.0);

  int size() const { return static_cast<int>(nodes_.size()); }
  const PlannerNode & node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  PlannerNode & node_mut(int i) { return nodes_[static_cast<std::size_t>(i)]; }

  /// Index of the metric-nearest node; ties break toward the lowest index.
  int nearest(const Pose & q) const;
  int nearest_brute(const Pose & q) const;
  /// Indices with metric distance <= radius, ascending.
  std::vector<int> near(const Pose & q, double radius) const;

  int insert(const Pose & pose, int parent, Path edge, double edge_length);
  /// Attach `child` under `new_parent`; updates subtree costs. Returns the
  /// set of nodes whose cost changed.
  std::vector<int> reparent(int child, int new_parent, Path edge, double edge_length);

  /// Walk to the root; returns false if a cycle is detected.
  bool acyclic() const;
  /// Largest |stored cost - recomputed cost| over all nodes.
  double max_cost_error() const;

 private:
  int cell_of(const Pose & q) const;

  std::vector<PlannerNode> nodes_;
  BoundsRect bounds_;
  double w_xy_;
  double w_theta_;
  double cell_;
  int nx_{0};
  int ny_{0};
  std::vector<std::vector<int>> grid_;
};

enum class PlanVariant { MinCostTree, FixedLTree, DiscontinuousTree, NoTreeBaseline };

const char * variant_name(PlanVariant v);

struct SolutionEntry {
  int node{-1};
  int candidate{-1};
  double total_length{std::numeric_limits<double>::infinity()};
};

struct PlanStats {
  long iterations{0};
  int nodes{0};
  double t_tfs_s{0.0};
  double t_ttfp_s{-1.0};  // negative: no solution
  long iter_ttfp{-1};
  double t_total_s{0.0};
};

struct PlanResult {
  std::optional<Path> best_path;
  double best_total_length{std::numeric_limits<double>::infinity()};
  std::vector<SolutionEntry> q_soln;
  /// (budget position, best total length); budget position is elapsed
  /// seconds under a wall-clock budget and the iteration count under an
  /// iteration budget.
  std::vector<std::pair<double, double>> history;
  PlanStats stats;
  TargetTree target_tree;
  PlanVariant variant{PlanVariant::MinCostTree};
  std::uint64_t seed{0};

  bool found() const { return best_path.has_value(); }
};

struct PlanInstrumentation {
  /// Invoked after every accepted rewire.
  std::function<void(const PlannerTree &, long iteration)> after_rewire;
};

struct PlanOptions {
  PlanVariant variant{PlanVariant::MinCostTree};
  double fixed_l{0.0};  // FixedLTree only
  const PlanInstrumentation * instrumentation{nullptr};
};

/// Sampling/extension machinery of one planning run; exposed for tests.
class RrtPlanner {
 public:
  RrtPlanner(const Scenario & scn, TargetTree target, const CollisionChecker & env);

  struct Sample {
    Pose pose;
    int candidate{-1};  // >= 0: index into the target tree's candidate goals
  };

  Sample sample(std::mt19937_64 & rng) const;

  struct ExtendResult {
    int node{-1};  // -1: no progress
    bool reached_candidate{false};
    bool rewired{false};
    bool solution_cost_changed{false};
  };
  ExtendResult extend(const Sample & sample);

  PlannerTree & tree() { return tree_; }
  const TargetTree & target() const { return target_; }
  const std::vector<SolutionEntry> & solutions() const { return q_soln_; }

  /// Recompute the Eq. 6 minimum over the solution set.
  std::optional<SolutionEntry> best_solution();
  Path extract_path(const SolutionEntry & entry) const;

 private:
  const Scenario & scn_;
  TargetTree target_;
  const CollisionChecker & env_;
  PlannerTree tree_;
  std::vector<SolutionEntry> q_soln_;
  SteerOptions steer_opt_;
};

PlanResult plan(const Scenario & scn, const PlanOptions & opt = {});
PlanResult plan_baseline_no_tree(const Scenario & scn);
PlanResult plan_discontinuous_variant(const Scenario & scn);

}  // namespace ccpark

#endif  // CCPARK_PLANNER_HPP
