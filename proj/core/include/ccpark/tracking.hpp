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

#ifndef CCPARK_TRACKING_HPP
#define CCPARK_TRACKING_HPP

#include <array>
#include <optional>
#include <vector>

#include "ccpark/environment.hpp"
#include "ccpark/path.hpp"

namespace ccpark {

struct VehicleState {
  double x{0.0};
  double y{0.0};
  double theta{0.0};
  double delta{0.0};  // actual front steering angle, rad
  double v{0.0};      // signed longitudinal speed, m/s
};

struct SimConfig {
  double dt{0.01};
  double v_max_rrt{4.0 / 3.6};    // speed cap on the approach portion
  double v_max_tree{2.0 / 3.6};   // speed cap on the parking portion
  double switch_pause{3.0};       // stop duration at direction switches, s
  double delta_rate_max{0.0};     // <= 0: derived as sigma_max * L * v_max_tree
  double k_x{1.0};
  double k_y{0.64};
  double k_theta{1.6};
  double curvature_speed_coeff{6.0};  // v_ref = cap / (1 + c |kappa|)
  double max_sim_time{600.0};
  double divergence_limit{5.0};

  double effective_delta_rate(const VehicleParams & p) const
  {
    return delta_rate_max > 0.0 ? delta_rate_max : p.sigma_max * p.wheelbase_L * v_max_tree;
  }
};

struct TraceSample {
  double t;
  double x;
  double y;
  double theta;
  double delta_cmd;
  double delta_actual;
  double v;
  double cross_track;
};

struct TrackingReport {
  std::vector<std::pair<double, double>> cross_track;  // (progress s, error)
  double max_cross_track{0.0};
  double mean_cross_track{0.0};
  double lateral_alignment_error{0.0};
  double orientation_alignment_error{0.0};
  std::vector<TraceSample> trace;
  VehicleState final_state;
  bool diverged{false};
  bool completed{false};
  double duration_s{0.0};
};

/// Closed-loop bicycle simulation of a vehicle following `path` under a
/// Kanayama-style controller with a steering-rate-limited actuator. The
/// vehicle stops for switch_pause seconds at every driving-direction change.
/// The vehicle starts at the path's start pose unless an initial state is
/// given.
TrackingReport simulate_tracking(const Path & path, const Scenario & scn, const SimConfig & sim,
                                 const std::optional<VehicleState> & initial = {});

/// (lateral, orientation) alignment at rest: the cross-spot position
/// component and the shortest heading difference to the goal pose.
std::pair<double, double> alignment_errors(const VehicleState & final_state, const Pose & q_goal);

}  // namespace ccpark

#endif  // CCPARK_TRACKING_HPP
