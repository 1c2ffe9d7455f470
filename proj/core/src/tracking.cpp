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

#include "ccpark/tracking.hpp"

#include <algorithm>
#include <cmath>

namespace ccpark {

namespace {

constexpr double kSampleDs = 0.02;

struct RefPoint {
  double s{0.0};
  Pose pose;
  double v_cap{0.0};
};

struct Leg {
  std::vector<RefPoint> points;
  Direction dir{Direction::Forward};
  double length() const { return points.empty() ? 0.0 : points.back().s; }
};

std::vector<Leg> split_into_legs(const Path & path, const SimConfig & sim)
{
  std::vector<Leg> legs;
  for (const auto & seg : path.segments) {
    if (seg.length < 1.0e-9) {
      continue;
    }
    if (legs.empty() || legs.back().dir != seg.direction) {
      legs.push_back({});
      legs.back().dir = seg.direction;
    }
    Leg & leg = legs.back();
    const double base = leg.points.empty() ? 0.0 : leg.points.back().s;
    const double cap = seg.on_target_tree ? sim.v_max_tree : sim.v_max_rrt;
    const auto samples = sample_segment(seg, kSampleDs);
    for (const auto & [s, pose] : samples) {
      if (!leg.points.empty() && s == 0.0) {
        continue;
      }
      leg.points.push_back({base + s, pose, cap});
    }
    if (leg.points.empty()) {
      leg.points.push_back({0.0, seg.start_pose, cap});
    }
  }
  return legs;
}

double point_segment_distance(const Vec2 & p, const Vec2 & a, const Vec2 & b)
{
  const Vec2 ab = b - a;
  const double len2 = ab.dot(ab);
  if (len2 < 1.0e-18) {
    return (p - a).norm();
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + ab * t)).norm();
}

}  // namespace

std::pair<double, double> alignment_errors(const VehicleState & final_state, const Pose & q_goal)
{
  const double dx = final_state.x - q_goal.x;
  const double dy = final_state.y - q_goal.y;
  const double lateral =
      std::abs(-std::sin(q_goal.theta) * dx + std::cos(q_goal.theta) * dy);
  const double orientation = std::abs(angle_diff(final_state.theta, q_goal.theta));
  return {lateral, orientation};
}

TrackingReport simulate_tracking(const Path & path, const Scenario & scn, const SimConfig & sim,
                                 const std::optional<VehicleState> & initial)
{
  TrackingReport report;
  const VehicleParams & vp = scn.vehicle;
  const double delta_rate = sim.effective_delta_rate(vp);
  const double delta_max = vp.max_steer_angle();

  const std::vector<Leg> legs = split_into_legs(path, sim);
  VehicleState state;
  if (initial) {
    state = *initial;
  } else {
    const Pose start = path.empty() ? scn.start : path.start_pose();
    state.x = start.x;
    state.y = start.y;
    state.theta = start.theta;
  }

  double t = 0.0;
  double cross_sum = 0.0;
  long cross_count = 0;

  auto slew_delta = [&](double target) {
    const double limit = delta_rate * sim.dt;
    const double diff = std::clamp(target - state.delta, -limit, limit);
    state.delta += diff;
  };

  for (std::size_t li = 0; li < legs.size(); ++li) {
    const Leg & leg = legs[li];
    const double d = static_cast<double>(direction_sign(leg.dir));
    std::size_t cursor = 0;

    // Initial steering setup: the vehicle is stopped and may slew freely
    // toward the first reference steering angle of this leg.
    const double first_kappa = leg.points.front().pose.kappa;
    const double delta_ref0 = std::atan(vp.wheelbase_L * first_kappa * d);
    const double pause = (li == 0) ? 0.0 : sim.switch_pause;
    for (double tp = 0.0; tp < pause; tp += sim.dt) {
      slew_delta(delta_ref0);
      state.v = 0.0;
      report.trace.push_back({t, state.x, state.y, state.theta, delta_ref0, state.delta, 0.0,
                              report.cross_track.empty() ? 0.0 : report.cross_track.back().second});
      t += sim.dt;
    }

    bool leg_done = false;
    while (!leg_done && t < sim.max_sim_time) {
      const Vec2 pos{state.x, state.y};
      // Windowed closest-point lookup, monotone within the leg.
      std::size_t best = cursor;
      double best_d2 = std::numeric_limits<double>::infinity();
      const std::size_t lookahead =
          std::min(leg.points.size() - 1, cursor + static_cast<std::size_t>(3.0 / kSampleDs));
      for (std::size_t i = cursor; i <= lookahead; ++i) {
        const double dx = leg.points[i].pose.x - pos.x;
        const double dy = leg.points[i].pose.y - pos.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
          best_d2 = d2;
          best = i;
        }
      }
      cursor = best;
      const RefPoint & ref = leg.points[best];

      // Cross-track error against the two segments adjacent to the sample.
      double cross = std::sqrt(best_d2);
      if (best > 0) {
        cross = std::min(cross, point_segment_distance(pos, leg.points[best - 1].pose.position(),
                                                       ref.pose.position()));
      }
      if (best + 1 < leg.points.size()) {
        cross = std::min(cross, point_segment_distance(pos, ref.pose.position(),
                                                       leg.points[best + 1].pose.position()));
      }
      report.cross_track.emplace_back(ref.s, cross);
      report.max_cross_track = std::max(report.max_cross_track, cross);
      cross_sum += cross;
      ++cross_count;
      if (cross > sim.divergence_limit) {
        report.diverged = true;
        report.final_state = state;
        report.duration_s = t;
        const auto [lat, ori] = alignment_errors(state, scn.spot.goal);
        report.lateral_alignment_error = lat;
        report.orientation_alignment_error = ori;
        report.mean_cross_track = cross_sum / static_cast<double>(cross_count);
        return report;
      }

      // Errors in the travel-aligned vehicle frame.
      const double hv = state.theta + (d < 0.0 ? M_PI : 0.0);
      const double ex_w = ref.pose.x - state.x;
      const double ey_w = ref.pose.y - state.y;
      const double xe = std::cos(hv) * ex_w + std::sin(hv) * ey_w;
      const double ye = -std::sin(hv) * ex_w + std::cos(hv) * ey_w;
      const double the = angle_diff(ref.pose.theta, state.theta);

      const double v_ref = ref.v_cap / (1.0 + sim.curvature_speed_coeff * std::abs(ref.pose.kappa));
      double v_cmd = v_ref * std::cos(the) + sim.k_x * xe;
      v_cmd = std::clamp(v_cmd, 0.0, ref.v_cap);
      const double omega_ref = ref.pose.kappa * v_ref;
      const double omega_cmd =
          omega_ref + v_ref * (sim.k_y * ye + sim.k_theta * std::sin(the));
      const double v_for_steer = std::max(v_cmd, 0.05);
      double delta_cmd = std::atan(vp.wheelbase_L * omega_cmd / (d * v_for_steer));
      delta_cmd = std::clamp(delta_cmd, -delta_max, delta_max);

      slew_delta(delta_cmd);
      state.v = d * v_cmd;
      state.x += state.v * std::cos(state.theta) * sim.dt;
      state.y += state.v * std::sin(state.theta) * sim.dt;
      state.theta = normalize_angle(state.theta +
                                    state.v * std::tan(state.delta) / vp.wheelbase_L * sim.dt);
      report.trace.push_back(
          {t, state.x, state.y, state.theta, delta_cmd, state.delta, state.v, cross});
      t += sim.dt;

      // Leg completion: past the last sample with no remaining along-travel
      // error toward it.
      if (best + 1 >= leg.points.size()) {
        const RefPoint & last = leg.points.back();
        const double hx = std::cos(state.theta + (d < 0.0 ? M_PI : 0.0));
        const double hy = std::sin(state.theta + (d < 0.0 ? M_PI : 0.0));
        const double along = hx * (last.pose.x - state.x) + hy * (last.pose.y - state.y);
        if (along <= 0.01) {
          leg_done = true;
        }
      }
    }
    if (t >= sim.max_sim_time) {
      break;
    }
  }

  state.v = 0.0;
  report.final_state = state;
  report.duration_s = t;
  report.completed = t < sim.max_sim_time;
  report.mean_cross_track = cross_count > 0 ? cross_sum / static_cast<double>(cross_count) : 0.0;
  const auto [lat, ori] = alignment_errors(state, scn.spot.goal);
  report.lateral_alignment_error = lat;
  report.orientation_alignment_error = ori;
  return report;
}

}  // namespace ccpark
