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

#include "ccpark/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace ccpark {

namespace {

constexpr double kPoseMatchTol = 1.0e-6;

double uniform01(std::mt19937_64 & rng)
{
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

/// Lower bound on the length of any feasible path between two poses:
/// at least the chord, at least the heading change at minimum radius.
double edge_length_lower_bound(const Pose & a, const Pose & b, double kappa_max)
{
  const double chord = std::hypot(b.x - a.x, b.y - a.y);
  const double dth = std::abs(angle_diff(b.theta, a.theta));
  return std::max(chord, dth / kappa_max);
}

bool poses_match(const Pose & a, const Pose & b)
{
  return std::hypot(a.x - b.x, a.y - b.y) <= kPoseMatchTol &&
         std::abs(angle_diff(a.theta, b.theta)) <= kPoseMatchTol &&
         std::abs(a.kappa - b.kappa) <= kPoseMatchTol;
}

}  // namespace

double pose_metric(const Pose & a, const Pose & b, double w_xy, double w_theta)
{
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(w_xy * (dx * dx + dy * dy)) + w_theta * std::abs(angle_diff(a.theta, b.theta));
}

PlannerTree::PlannerTree(const Pose & root, const BoundsRect & bounds, double w_xy, double w_theta,
                         double cell)
: bounds_(bounds), w_xy_(w_xy), w_theta_(w_theta), cell_(cell)
{
  nx_ = std::max(1, static_cast<int>(std::ceil(bounds_.width() / cell_)));
  ny_ = std::max(1, static_cast<int>(std::ceil(bounds_.height() / cell_)));
  grid_.resize(static_cast<std::size_t>(nx_) * ny_);
  PlannerNode n;
  n.pose = root;
  nodes_.push_back(std::move(n));
  grid_[static_cast<std::size_t>(cell_of(root))].push_back(0);
}

int PlannerTree::cell_of(const Pose & q) const
{
  const int cx = std::clamp(static_cast<int>((q.x - bounds_.xmin) / cell_), 0, nx_ - 1);
  const int cy = std::clamp(static_cast<int>((q.y - bounds_.ymin) / cell_), 0, ny_ - 1);
  return cy * nx_ + cx;
}

int PlannerTree::nearest(const Pose & q) const
{
  const int cx0 = std::clamp(static_cast<int>((q.x - bounds_.xmin) / cell_), 0, nx_ - 1);
  const int cy0 = std::clamp(static_cast<int>((q.y - bounds_.ymin) / cell_), 0, ny_ - 1);
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  const int max_ring = std::max(nx_, ny_);
  for (int ring = 0; ring <= max_ring; ++ring) {
    if (best >= 0 && best_d <= std::sqrt(w_xy_) * (static_cast<double>(ring) - 1.0) * cell_) {
      break;
    }
    bool visited_any = false;
    for (int cy = cy0 - ring; cy <= cy0 + ring; ++cy) {
      if (cy < 0 || cy >= ny_) {
        continue;
      }
      for (int cx = cx0 - ring; cx <= cx0 + ring; ++cx) {
        if (cx < 0 || cx >= nx_) {
          continue;
        }
        if (std::max(std::abs(cx - cx0), std::abs(cy - cy0)) != ring) {
          continue;
        }
        visited_any = true;
        for (int idx : grid_[static_cast<std::size_t>(cy) * nx_ + cx]) {
          const double d = pose_metric(nodes_[static_cast<std::size_t>(idx)].pose, q, w_xy_,
                                       w_theta_);
          if (d < best_d || (d == best_d && idx < best)) {
            best_d = d;
            best = idx;
          }
        }
      }
    }
    if (!visited_any && ring > std::max(nx_, ny_)) {
      break;
    }
  }
  return best;
}

int PlannerTree::nearest_brute(const Pose & q) const
{
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    const double d = pose_metric(nodes_[static_cast<std::size_t>(i)].pose, q, w_xy_, w_theta_);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::vector<int> PlannerTree::near(const Pose & q, double radius) const
{
  std::vector<int> out;
  const double reach = radius / std::sqrt(w_xy_);
  const int cx0 = std::clamp(static_cast<int>((q.x - bounds_.xmin) / cell_), 0, nx_ - 1);
  const int cy0 = std::clamp(static_cast<int>((q.y - bounds_.ymin) / cell_), 0, ny_ - 1);
  const int span = static_cast<int>(std::ceil(reach / cell_)) + 1;
  for (int cy = std::max(0, cy0 - span); cy <= std::min(ny_ - 1, cy0 + span); ++cy) {
    for (int cx = std::max(0, cx0 - span); cx <= std::min(nx_ - 1, cx0 + span); ++cx) {
      for (int idx : grid_[static_cast<std::size_t>(cy) * nx_ + cx]) {
        if (pose_metric(nodes_[static_cast<std::size_t>(idx)].pose, q, w_xy_, w_theta_) <=
            radius) {
          out.push_back(idx);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PlannerTree::insert(const Pose & pose, int parent, Path edge, double edge_length)
{
  PlannerNode n;
  n.pose = pose;
  n.parent = parent;
  n.edge = std::move(edge);
  n.edge_length = edge_length;
  n.cost_from_root = nodes_[static_cast<std::size_t>(parent)].cost_from_root + edge_length;
  const int idx = size();
  nodes_.push_back(std::move(n));
  nodes_[static_cast<std::size_t>(parent)].children.push_back(idx);
  grid_[static_cast<std::size_t>(cell_of(pose))].push_back(idx);
  return idx;
}

std::vector<int> PlannerTree::reparent(int child, int new_parent, Path edge, double edge_length)
{
  PlannerNode & c = nodes_[static_cast<std::size_t>(child)];
  PlannerNode & old_parent = nodes_[static_cast<std::size_t>(c.parent)];
  old_parent.children.erase(std::find(old_parent.children.begin(), old_parent.children.end(),
                                      child));
  c.parent = new_parent;
  c.edge = std::move(edge);
  c.edge_length = edge_length;
  nodes_[static_cast<std::size_t>(new_parent)].children.push_back(child);

  std::vector<int> touched;
  std::vector<int> stack{child};
  while (!stack.empty()) {
    const int idx = stack.back();
    stack.pop_back();
    PlannerNode & n = nodes_[static_cast<std::size_t>(idx)];
    n.cost_from_root =
        nodes_[static_cast<std::size_t>(n.parent)].cost_from_root + n.edge_length;
    touched.push_back(idx);
    for (int ch : n.children) {
      stack.push_back(ch);
    }
  }
  return touched;
}

bool PlannerTree::acyclic() const
{
  for (int i = 0; i < size(); ++i) {
    int hops = 0;
    int cur = i;
    while (cur != -1) {
      cur = nodes_[static_cast<std::size_t>(cur)].parent;
      if (++hops > size()) {
        return false;
      }
    }
  }
  return true;
}

double PlannerTree::max_cost_error() const
{
  double worst = 0.0;
  for (int i = 0; i < size(); ++i) {
    const PlannerNode & n = nodes_[static_cast<std::size_t>(i)];
    double expect = 0.0;
    int cur = i;
    while (nodes_[static_cast<std::size_t>(cur)].parent != -1) {
      expect += nodes_[static_cast<std::size_t>(cur)].edge_length;
      cur = nodes_[static_cast<std::size_t>(cur)].parent;
    }
    worst = std::max(worst, std::abs(expect - n.cost_from_root));
  }
  return worst;
}

const char * variant_name(PlanVariant v)
{
  switch (v) {
    case PlanVariant::MinCostTree:
      return "min_cost_tree";
    case PlanVariant::FixedLTree:
      return "fixed_l_tree";
    case PlanVariant::DiscontinuousTree:
      return "discontinuous_tree";
    case PlanVariant::NoTreeBaseline:
      return "no_tree_baseline";
  }
  return "unknown";
}

RrtPlanner::RrtPlanner(const Scenario & scn, TargetTree target, const CollisionChecker & env)
: scn_(scn), target_(std::move(target)), env_(env),
  tree_(scn.start, scn.bounds, scn.planner.w_xy, scn.planner.w_theta)
{
  // The start pose may already sit on a candidate goal.
  for (int c = 0; c < static_cast<int>(target_.candidate_goals.size()); ++c) {
    if (poses_match(scn_.start, target_.candidate_goals[static_cast<std::size_t>(c)].pose)) {
      q_soln_.push_back({0, c, std::numeric_limits<double>::infinity()});
    }
  }
}

RrtPlanner::Sample RrtPlanner::sample(std::mt19937_64 & rng) const
{
  Sample s;
  const double u = uniform01(rng);
  if (u < scn_.planner.tau && !target_.candidate_goals.empty()) {
    const std::size_t idx = static_cast<std::size_t>(rng() % target_.candidate_goals.size());
    s.candidate = static_cast<int>(idx);
    s.pose = target_.candidate_goals[idx].pose;
    return s;
  }
  const double x = scn_.bounds.xmin + uniform01(rng) * scn_.bounds.width();
  const double y = scn_.bounds.ymin + uniform01(rng) * scn_.bounds.height();
  const double theta = -M_PI + uniform01(rng) * 2.0 * M_PI;
  s.pose = Pose{x, y, theta, 0.0};
  return s;
}

RrtPlanner::ExtendResult RrtPlanner::extend(const Sample & sample)
{
  ExtendResult result;
  const PlannerConfig & cfg = scn_.planner;

  const int nearest_idx = tree_.nearest(sample.pose);
  const bool is_goal_sample = sample.candidate >= 0;

  // Goal samples probe several anchors when the nearest node cannot produce
  // a collision-free splice. Anchors are spread over distance rings rather
  // than taken nearest-first: truncated frontier nodes cluster against
  // obstacles, and the whole cluster tends to fail the same way.
  std::vector<int> anchors{nearest_idx};
  if (is_goal_sample) {
    std::vector<std::pair<double, int>> ranked;
    for (int idx : tree_.near(sample.pose, 1.5 * cfg.near_radius_max)) {
      if (idx == nearest_idx) {
        continue;
      }
      ranked.emplace_back(
          pose_metric(tree_.node(idx).pose, sample.pose, cfg.w_xy, cfg.w_theta), idx);
    }
    std::sort(ranked.begin(), ranked.end());
    double next_ring = 0.0;
    for (const auto & [metric, idx] : ranked) {
      if (anchors.size() >= 5) {
        break;
      }
      if (metric < next_ring) {
        continue;
      }
      anchors.push_back(idx);
      next_ring = metric + 1.2;
    }
  }

  // Candidate-goal samples are exact connections: the steer runs to full
  // length so the new node lands on the candidate pose, and alternative
  // constructions (including drive-past-and-reverse) are tried against
  // obstacles. Uniform samples extend by at most one steer step.
  //
  // A candidate on a turning branch can be arrived at two ways: driving the
  // branch's own direction and stopping at the splice (curvature may jump
  // across the stop), or already reversing along the branch geometry, which
  // needs the mirrored curvature and no stop. Both are tried.
  struct Attempt {
    Path path;
    std::optional<Direction> constraint;
  };
  Path edge;
  double edge_len = 0.0;
  bool reached = false;
  bool have_edge = false;
  std::optional<Direction> constraint;
  int anchor_idx = nearest_idx;

  for (int anchor : anchors) {
    const Pose anchor_pose = tree_.node(anchor).pose;
    std::vector<Attempt> attempts;
    if (is_goal_sample &&
        std::abs(target_.candidate_goals[static_cast<std::size_t>(sample.candidate)].pose.kappa) >
            1.0e-12) {
      const CandidateGoal & cand =
          target_.candidate_goals[static_cast<std::size_t>(sample.candidate)];
      // Reverse-through splice: already tracking the branch geometry, no
      // stop, so the mirrored curvature must match exactly.
      Pose mirrored = cand.pose;
      mirrored.kappa = -mirrored.kappa;
      SteerOptions through_opt = steer_opt_;
      through_opt.required_final_direction = opposite(cand.branch_direction);
      for (auto & p :
           cc_steer_alternatives(anchor_pose, mirrored, scn_.vehicle, through_opt, true, 4)) {
        attempts.push_back({std::move(p), opposite(cand.branch_direction)});
      }
      // Stop splice: the vehicle halts and re-steers, so the arrival
      // curvature is free; ending straightened is the easiest geometry.
      Pose relaxed = cand.pose;
      relaxed.kappa = 0.0;
      SteerOptions stop_opt = steer_opt_;
      stop_opt.required_final_direction = cand.branch_direction;
      for (auto & p :
           cc_steer_alternatives(anchor_pose, relaxed, scn_.vehicle, stop_opt, true, 4)) {
        attempts.push_back({std::move(p), cand.branch_direction});
      }
      for (auto & p :
           cc_steer_alternatives(anchor_pose, cand.pose, scn_.vehicle, stop_opt, true, 4)) {
        attempts.push_back({std::move(p), cand.branch_direction});
      }
      std::stable_sort(attempts.begin(), attempts.end(),
                       [](const Attempt & a, const Attempt & b) {
                         return a.path.length() < b.path.length();
                       });
    } else {
      for (auto & p : cc_steer_alternatives(anchor_pose, sample.pose, scn_.vehicle, steer_opt_,
                                            is_goal_sample, is_goal_sample ? 8 : 3)) {
        attempts.push_back({std::move(p), std::nullopt});
      }
    }

    for (Attempt & attempt : attempts) {
      Path trial = std::move(attempt.path);
      bool trial_reached = true;
      if (!is_goal_sample && trial.length() > cfg.steer_step + 1.0e-9) {
        trial = truncate_path(trial, cfg.steer_step);
        trial_reached = false;
      }
      if (trial.empty()) {
        continue;  // zero-length: the sampled pose coincides with the node
      }
      if (is_goal_sample) {
        // The node must land on the candidate: the whole edge must be free.
        if (!env_.path_free(scn_.vehicle, trial, cfg.ds_col)) {
          continue;
        }
      } else {
        // Grow as far as the free prefix allows, backed off from the
        // blocking obstacle so the new state keeps room to maneuver.
        double free_len = -1.0;
        for (const auto & [s, pose] : sample_path(trial, cfg.ds_col)) {
          if (!env_.pose_free(scn_.vehicle, pose)) {
            break;
          }
          free_len = s;
        }
        if (free_len < trial.length() - 1.0e-9) {
          free_len -= 1.0;
          trial_reached = false;
          if (free_len < 0.25) {
            continue;
          }
          trial = truncate_path(trial, free_len);
        }
        if (trial.empty()) {
          continue;
        }
      }
      edge = std::move(trial);
      edge_len = edge.length();
      reached = trial_reached;
      constraint = attempt.constraint;
      anchor_idx = anchor;
      have_edge = true;
      break;
    }
    if (have_edge) {
      break;
    }
  }
  if (!have_edge) {
    return result;
  }
  const Pose q_new = edge.end_pose();

  // Truncated escape maneuvers from a wedged frontier node produce the same
  // endpoint for many samples; repeated states add nothing to the tree.
  if (!is_goal_sample) {
    for (int idx : tree_.near(q_new, 1.0e-6)) {
      if (std::abs(tree_.node(idx).pose.kappa - q_new.kappa) < 1.0e-9) {
        return result;
      }
    }
  }

  // Choose parent among the near set.
  const int n = tree_.size();
  const double radius =
      std::min(cfg.rewire_gamma * std::cbrt(std::log(n + 1.0) / (n + 1.0)), cfg.near_radius_max);
  std::vector<int> near = tree_.near(q_new, radius);

  int parent = anchor_idx;
  Path best_edge = std::move(edge);
  double best_edge_len = edge_len;
  double best_cost = tree_.node(anchor_idx).cost_from_root + edge_len;

  SteerOptions exact_opt = steer_opt_;
  if (reached && constraint) {
    exact_opt.required_final_direction = constraint;
  }

  struct Rated {
    int idx;
    double bound;
  };
  std::vector<Rated> rated;
  rated.reserve(near.size());
  for (int idx : near) {
    if (idx == anchor_idx) {
      continue;
    }
    const double bound = tree_.node(idx).cost_from_root +
                         edge_length_lower_bound(tree_.node(idx).pose, q_new,
                                                 scn_.vehicle.kappa_max);
    rated.push_back({idx, bound});
  }
  std::sort(rated.begin(), rated.end(), [](const Rated & a, const Rated & b) {
    return a.bound < b.bound || (a.bound == b.bound && a.idx < b.idx);
  });
  for (const Rated & r : rated) {
    if (r.bound >= best_cost) {
      break;
    }
    auto alt = cc_steer(tree_.node(r.idx).pose, q_new, scn_.vehicle, exact_opt);
    if (!alt || alt->empty()) {
      continue;
    }
    const double len = alt->length();
    const double cost = tree_.node(r.idx).cost_from_root + len;
    if (cost < best_cost - 1.0e-12 && env_.path_free(scn_.vehicle, *alt, cfg.ds_col)) {
      parent = r.idx;
      best_edge = std::move(*alt);
      best_edge_len = len;
      best_cost = cost;
    }
  }

  const int new_idx = tree_.insert(q_new, parent, std::move(best_edge), best_edge_len);
  result.node = new_idx;

  if (reached && is_goal_sample &&
      std::hypot(q_new.x - sample.pose.x, q_new.y - sample.pose.y) <= kPoseMatchTol &&
      std::abs(angle_diff(q_new.theta, sample.pose.theta)) <= kPoseMatchTol) {
    tree_.node_mut(new_idx).arrival_constraint = constraint;
    q_soln_.push_back({new_idx, sample.candidate, std::numeric_limits<double>::infinity()});
    result.reached_candidate = true;
    result.solution_cost_changed = true;
  }

  // Rewire the near set through the new node.
  for (int idx : near) {
    if (idx == parent || idx == new_idx) {
      continue;
    }
    const PlannerNode & x = tree_.node(idx);
    if (x.parent == -1) {
      continue;  // never reparent the root
    }
    const double bound =
        best_cost + edge_length_lower_bound(q_new, x.pose, scn_.vehicle.kappa_max);
    if (bound >= x.cost_from_root - 1.0e-12) {
      continue;
    }
    SteerOptions rewire_opt = steer_opt_;
    rewire_opt.required_final_direction = x.arrival_constraint;
    auto alt = cc_steer(q_new, x.pose, scn_.vehicle, rewire_opt);
    if (!alt || alt->empty()) {
      continue;
    }
    const double len = alt->length();
    if (best_cost + len >= x.cost_from_root - 1.0e-12) {
      continue;
    }
    if (!env_.path_free(scn_.vehicle, *alt, cfg.ds_col)) {
      continue;
    }
    // Reparenting a node on the new node's own ancestor chain would create
    // a cycle; the cost test above excludes ancestors (their cost is lower),
    // so this is safe.
    const std::vector<int> touched = tree_.reparent(idx, new_idx, std::move(*alt), len);
    result.rewired = true;
    for (int t : touched) {
      for (const auto & entry : q_soln_) {
        if (entry.node == t) {
          result.solution_cost_changed = true;
          break;
        }
      }
    }
  }
  return result;
}

std::optional<SolutionEntry> RrtPlanner::best_solution()
{
  std::optional<SolutionEntry> best;
  for (auto & entry : q_soln_) {
    const double total =
        tree_.node(entry.node).cost_from_root +
        target_.candidate_goals[static_cast<std::size_t>(entry.candidate)].remaining_length;
    entry.total_length = total;
    if (!best || total < best->total_length) {
      best = entry;
    }
  }
  return best;
}

Path RrtPlanner::extract_path(const SolutionEntry & entry) const
{
  std::vector<int> chain;
  for (int cur = entry.node; cur != -1; cur = tree_.node(cur).parent) {
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  Path out;
  for (int idx : chain) {
    if (tree_.node(idx).parent != -1) {
      out.append(tree_.node(idx).edge);
    }
  }
  out.append(
      parking_suffix(target_, target_.candidate_goals[static_cast<std::size_t>(entry.candidate)]));
  return out;
}

namespace {

TargetTree baseline_tree(const Pose & q_goal)
{
  TargetTree tree;
  tree.goal = q_goal;
  tree.frame = q_goal;
  tree.cost = 1.0;
  TargetBranch branch;
  branch.tip = q_goal;
  tree.branches.push_back(branch);
  CandidateGoal cand;
  cand.pose = q_goal;
  cand.remaining_length = 0.0;
  cand.branch_id = 0;
  tree.candidate_goals.push_back(cand);
  return tree;
}

}  // namespace

PlanResult plan(const Scenario & scn, const PlanOptions & opt)
{
  using clock = std::chrono::steady_clock;
  const auto t_start = clock::now();
  auto elapsed = [&t_start]() {
    return std::chrono::duration<double>(clock::now() - t_start).count();
  };

  const CollisionChecker env = CollisionChecker::for_scenario(scn);

  PlanResult result;
  result.variant = opt.variant;
  result.seed = scn.seed;

  TargetTree target;
  TargetTreeConfig tree_cfg = scn.planner.tree;
  switch (opt.variant) {
    case PlanVariant::MinCostTree:
      target = initialize_target_tree(scn.spot.goal, scn.spot, env, scn.vehicle, tree_cfg);
      break;
    case PlanVariant::FixedLTree:
      target = scn.spot.mode == SpotMode::Perpendicular
                   ? build_perpendicular_tree(scn.spot.goal, opt.fixed_l, env, scn.vehicle,
                                              tree_cfg)
                   : build_parallel_tree(scn.spot.goal, opt.fixed_l, scn.spot, env, scn.vehicle,
                                         tree_cfg);
      break;
    case PlanVariant::DiscontinuousTree:
      tree_cfg.continuous = false;
      target = initialize_target_tree(scn.spot.goal, scn.spot, env, scn.vehicle, tree_cfg);
      break;
    case PlanVariant::NoTreeBaseline:
      target = baseline_tree(scn.spot.goal);
      break;
  }
  result.stats.t_tfs_s = elapsed();

  RrtPlanner planner(scn, std::move(target), env);
  std::mt19937_64 rng(scn.seed);

  const bool deterministic = scn.planner.iter_max.has_value();
  const long iter_max = deterministic ? *scn.planner.iter_max : std::numeric_limits<long>::max();
  const double t_max = deterministic ? std::numeric_limits<double>::infinity()
                                     : result.stats.t_tfs_s + *scn.planner.t_max;

  double best_len = std::numeric_limits<double>::infinity();
  auto budget_position = [&](long iter) {
    return deterministic ? static_cast<double>(iter) : elapsed();
  };

  auto refresh_best = [&](long iter) {
    const auto best = planner.best_solution();
    if (best && best->total_length < best_len - 1.0e-12) {
      best_len = best->total_length;
      result.history.emplace_back(budget_position(iter), best_len);
      if (result.stats.iter_ttfp < 0) {
        result.stats.iter_ttfp = iter;
        result.stats.t_ttfp_s = elapsed() - result.stats.t_tfs_s;
      }
    }
  };
  if (!planner.solutions().empty()) {
    refresh_best(0);
  }

  long iter = 0;
  while (iter < iter_max && elapsed() < t_max) {
    ++iter;
    const auto sample = planner.sample(rng);
    const auto res = planner.extend(sample);
    if (res.node < 0) {
      continue;
    }
    if (opt.instrumentation && opt.instrumentation->after_rewire && res.rewired) {
      opt.instrumentation->after_rewire(planner.tree(), iter);
    }
    if (res.solution_cost_changed) {
      refresh_best(iter);
    }
  }

  result.stats.iterations = iter;
  result.stats.nodes = planner.tree().size();
  const auto best = planner.best_solution();
  if (best) {
    result.best_total_length = best->total_length;
    result.best_path = planner.extract_path(*best);
    result.q_soln = planner.solutions();
  }
  result.target_tree = planner.target();
  result.stats.t_total_s = elapsed();
  return result;
}

PlanResult plan_baseline_no_tree(const Scenario & scn)
{
  PlanOptions opt;
  opt.variant = PlanVariant::NoTreeBaseline;
  return plan(scn, opt);
}

PlanResult plan_discontinuous_variant(const Scenario & scn)
{
  PlanOptions opt;
  opt.variant = PlanVariant::DiscontinuousTree;
  return plan(scn, opt);
}

}  // namespace ccpark
