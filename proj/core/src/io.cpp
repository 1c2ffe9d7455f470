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

#include "ccpark/io.hpp"

#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccpark {

namespace {

std::string format_row(const char * fmt, ...)
{
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

}  // namespace

std::string path_to_csv(const Path & path, double ds)
{
  std::string out = "idx,s,x,y,theta,kappa,direction\n";
  const auto samples = sample_path(path, ds);
  double base = 0.0;
  std::size_t seg_index = 0;
  double seg_end = path.segments.empty() ? 0.0 : path.segments[0].length;
  int idx = 0;
  for (const auto & [s, pose] : samples) {
    while (seg_index + 1 < path.segments.size() && s > seg_end + 1.0e-9) {
      base = seg_end;
      ++seg_index;
      seg_end += path.segments[seg_index].length;
    }
    (void)base;
    const Direction dir =
        path.segments.empty() ? Direction::Forward : path.segments[seg_index].direction;
    out += format_row("%d,%.9f,%.9f,%.9f,%.9f,%.9f,%d\n", idx, s, pose.x, pose.y, pose.theta,
                      pose.kappa, direction_sign(dir));
    ++idx;
  }
  return out;
}

SampledPath sampled_path_from_csv(const std::string & text)
{
  SampledPath out;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    SampledPath::Row row;
    int idx = 0;
    int dir = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf,%lf,%d", &idx, &row.s, &row.pose.x,
                    &row.pose.y, &row.pose.theta, &row.pose.kappa, &dir) != 7) {
      throw std::runtime_error("path CSV: malformed row: " + line);
    }
    row.direction = dir >= 0 ? Direction::Forward : Direction::Backward;
    out.rows.push_back(row);
  }
  return out;
}

std::string history_to_csv(const PlanResult & result)
{
  std::string out = "t_seconds,best_length_m\n";
  for (const auto & [t, len] : result.history) {
    out += format_row("%.9f,%.9f\n", t, len);
  }
  return out;
}

std::string target_tree_to_csv(const TargetTree & tree, double ds)
{
  std::string out = "branch_id,s,x,y,theta,kappa,remaining_length\n";
  for (std::size_t b = 0; b < tree.branches.size(); ++b) {
    const Path & path = tree.branches[b].path;
    if (path.empty()) {
      continue;
    }
    for (const auto & [s, pose] : sample_path(path, ds)) {
      out += format_row("%zu,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", b, s, pose.x, pose.y, pose.theta,
                        pose.kappa, s);
    }
  }
  return out;
}

TreeDump tree_dump_from_csv(const std::string & text)
{
  TreeDump out;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    TreeDump::Row row;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf,%lf,%lf", &row.branch, &row.s, &row.pose.x,
                    &row.pose.y, &row.pose.theta, &row.pose.kappa, &row.remaining) != 7) {
      throw std::runtime_error("tree CSV: malformed row: " + line);
    }
    out.rows.push_back(row);
  }
  return out;
}

std::string stats_to_text(const PlanResult & result, const Scenario & scn)
{
  std::ostringstream os;
  os.precision(9);
  os << "variant " << variant_name(result.variant) << "\n";
  os << "seed " << result.seed << "\n";
  os << "found " << (result.found() ? 1 : 0) << "\n";
  os << "best_length_m "
     << (result.found() ? result.best_total_length : -1.0) << "\n";
  os << "solutions " << result.q_soln.size() << "\n";
  os << "iterations " << result.stats.iterations << "\n";
  os << "nodes " << result.stats.nodes << "\n";
  os << "t_tfs_s " << result.stats.t_tfs_s << "\n";
  os << "t_ttfp_s " << result.stats.t_ttfp_s << "\n";
  os << "iter_ttfp " << result.stats.iter_ttfp << "\n";
  os << "t_total_s " << result.stats.t_total_s << "\n";
  os << "tree_cost " << result.target_tree.cost << "\n";
  os << "tree_straight_l " << result.target_tree.straight_length_l << "\n";
  os << "tree_branches " << result.target_tree.branches.size() << "\n";
  os << "tree_candidates " << result.target_tree.candidate_goals.size() << "\n";
  os << "obstacle_margin " << scn.planner.obstacle_margin << "\n";
  os << "tau " << scn.planner.tau << "\n";
  os << "steer_step " << scn.planner.steer_step << "\n";
  if (scn.planner.iter_max) {
    os << "budget_iters " << *scn.planner.iter_max << "\n";
  }
  if (scn.planner.t_max) {
    os << "budget_seconds " << *scn.planner.t_max << "\n";
  }
  return os.str();
}

std::string tracking_to_csv(const TrackingReport & report)
{
  std::string out = "t,x,y,theta,delta_cmd,delta_actual,v,cross_track\n";
  for (const auto & row : report.trace) {
    out += format_row("%.4f,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", row.t, row.x, row.y, row.theta,
                      row.delta_cmd, row.delta_actual, row.v, row.cross_track);
  }
  return out;
}

std::string tracking_summary(const TrackingReport & report)
{
  std::ostringstream os;
  os.precision(9);
  os << "completed " << (report.completed ? 1 : 0) << "\n";
  os << "diverged " << (report.diverged ? 1 : 0) << "\n";
  os << "duration_s " << report.duration_s << "\n";
  os << "max_cross_track_m " << report.max_cross_track << "\n";
  os << "mean_cross_track_m " << report.mean_cross_track << "\n";
  os << "lateral_alignment_error_m " << report.lateral_alignment_error << "\n";
  os << "orientation_alignment_error_rad " << report.orientation_alignment_error << "\n";
  return os.str();
}

void write_file(const std::string & path, const std::string & content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
}

std::string read_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ccpark
