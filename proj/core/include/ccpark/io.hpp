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

#ifndef CCPARK_IO_HPP
#define CCPARK_IO_HPP

#include <string>

#include "ccpark/planner.hpp"
#include "ccpark/target_tree.hpp"
#include "ccpark/tracking.hpp"

namespace ccpark {

/// Dense path samples: `idx,s,x,y,theta,kappa,direction`.
std::string path_to_csv(const Path & path, double ds = 0.05);

/// Reconstructs the sampled representation written by path_to_csv. The
/// result carries poses and directions only (no segment structure); it is
/// sufficient for tracking simulation and rendering.
struct SampledPath {
  struct Row {
    double s;
    Pose pose;
    Direction direction;
  };
  std::vector<Row> rows;
};
SampledPath sampled_path_from_csv(const std::string & text);

/// `t_seconds,best_length_m` (iteration index under an iteration budget).
std::string history_to_csv(const PlanResult & result);

/// `branch_id,s,x,y,theta,kappa,remaining_length`.
std::string target_tree_to_csv(const TargetTree & tree, double ds = 0.1);

/// Parsed form of the target-tree dump.
struct TreeDump {
  struct Row {
    int branch;
    double s;
    Pose pose;
    double remaining;
  };
  std::vector<Row> rows;
};
TreeDump tree_dump_from_csv(const std::string & text);

/// Key-value run summary.
std::string stats_to_text(const PlanResult & result, const Scenario & scn);

/// `t,x,y,theta,delta_cmd,delta_actual,v,cross_track`.
std::string tracking_to_csv(const TrackingReport & report);
std::string tracking_summary(const TrackingReport & report);

void write_file(const std::string & path, const std::string & content);
std::string read_file(const std::string & path);

}  // namespace ccpark

#endif  // CCPARK_IO_HPP
