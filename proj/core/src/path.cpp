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

#include "ccpark/path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ccpark/fresnel.hpp"

namespace ccpark {

Pose PathSegment::pose_at(double s) const
{
  s = std::clamp(s, 0.0, length);
  const double d = static_cast<double>(direction_sign(direction));
  const Vec2 local = spiral_displacement(start_kappa, sigma, s);
  const Vec2 world = local.rotated(start_pose.theta) * d;
  const double theta = start_pose.theta + start_kappa * s + 0.5 * sigma * s * s;
  return Pose{start_pose.x + world.x, start_pose.y + world.y, theta, kappa_at(s)};
}

PathSegment make_straight(const Pose & start, double length, Direction dir)
{
  PathSegment seg;
  seg.kind = SegmentKind::Straight;
  seg.length = length;
  seg.start_kappa = 0.0;
  seg.sigma = 0.0;
  seg.direction = dir;
  seg.start_pose = start;
  seg.start_pose.kappa = 0.0;
  return seg;
}

PathSegment make_arc(const Pose & start, double kappa, double length, Direction dir)
{
  PathSegment seg;
  seg.kind = SegmentKind::Arc;
  seg.length = length;
  seg.start_kappa = kappa;
  seg.sigma = 0.0;
  seg.direction = dir;
  seg.start_pose = start;
  seg.start_pose.kappa = kappa;
  return seg;
}

PathSegment make_clothoid(const Pose & start, double kappa0, double sigma, double length,
                          Direction dir)
{
  PathSegment seg;
  seg.kind = SegmentKind::Clothoid;
  seg.length = length;
  seg.start_kappa = kappa0;
  seg.sigma = sigma;
  seg.direction = dir;
  seg.start_pose = start;
  seg.start_pose.kappa = kappa0;
  return seg;
}

double Path::length() const
{
  double total = 0.0;
  for (const auto & seg : segments) {
    total += seg.length;
  }
  return total;
}

Pose Path::start_pose() const
{
  return segments.empty() ? Pose{} : segments.front().start_pose;
}

Pose Path::end_pose() const
{
  return segments.empty() ? Pose{} : segments.back().end_pose();
}

Pose Path::pose_at(double s) const
{
  if (segments.empty()) {
    return Pose{};
  }
  double acc = 0.0;
  for (const auto & seg : segments) {
    if (s <= acc + seg.length) {
      return seg.pose_at(s - acc);
    }
    acc += seg.length;
  }
  return segments.back().end_pose();
}

Direction Path::direction_at(double s) const
{
  if (segments.empty()) {
    return Direction::Forward;
  }
  double acc = 0.0;
  for (const auto & seg : segments) {
    if (s <= acc + seg.length) {
      return seg.direction;
    }
    acc += seg.length;
  }
  return segments.back().direction;
}

void Path::append(const Path & other)
{
  segments.insert(segments.end(), other.segments.begin(), other.segments.end());
}

int Path::direction_switches() const
{
  int n = 0;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    if (segments[i].direction != segments[i - 1].direction) {
      ++n;
    }
  }
  return n;
}

Pose clothoid_endpoint(double sigma, double kappa_target)
{
  if (sigma == 0.0) {
    throw std::invalid_argument("clothoid_endpoint: sigma must be nonzero");
  }
  if (kappa_target == 0.0) {
    return Pose{0.0, 0.0, 0.0, 0.0};
  }
  if ((sigma > 0.0) != (kappa_target > 0.0)) {
    throw std::invalid_argument("clothoid_endpoint: sigma and kappa_target must share sign");
  }
  const double s_end = kappa_target / sigma;
  const Vec2 d = spiral_displacement(0.0, sigma, s_end);
  const double theta = 0.5 * kappa_target * kappa_target / sigma;
  return Pose{d.x, d.y, theta, kappa_target};
}

std::vector<std::pair<double, Pose>> sample_segment(const PathSegment & seg, double ds)
{
  if (ds <= 0.0) {
    throw std::invalid_argument("sample_segment: ds must be positive");
  }
  std::vector<std::pair<double, Pose>> out;
  const int n = static_cast<int>(std::floor(seg.length / ds + 1.0e-12));
  out.reserve(static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= n; ++i) {
    const double s = i * ds;
    out.emplace_back(s, seg.pose_at(s));
  }
  if (out.back().first < seg.length - 1.0e-12) {
    out.emplace_back(seg.length, seg.end_pose());
  }
  return out;
}

std::vector<std::pair<double, Pose>> sample_path(const Path & path, double ds)
{
  std::vector<std::pair<double, Pose>> out;
  if (path.segments.empty()) {
    return out;
  }
  double base = 0.0;
  for (const auto & seg : path.segments) {
    const auto samples = sample_segment(seg, ds);
    for (const auto & [s, pose] : samples) {
      if (!out.empty() && s == 0.0) {
        continue;  // joint already emitted as the previous segment's end
      }
      out.emplace_back(base + s, pose);
    }
    base += seg.length;
  }
  if (out.empty() || out.front().first > 0.0) {
    out.insert(out.begin(), {0.0, path.start_pose()});
  }
  return out;
}

std::vector<std::pair<double, double>> path_curvature_profile(const Path & p, double ds)
{
  std::vector<std::pair<double, double>> out;
  double base = 0.0;
  for (const auto & seg : p.segments) {
    const auto samples = sample_segment(seg, ds);
    for (const auto & [s, pose] : samples) {
      out.emplace_back(base + s, pose.kappa);
    }
    base += seg.length;
  }
  return out;
}

Path truncate_path(const Path & p, double s_cut)
{
  Path out;
  if (s_cut <= 0.0) {
    return out;
  }
  double acc = 0.0;
  for (const auto & seg : p.segments) {
    if (s_cut >= acc + seg.length) {
      out.segments.push_back(seg);
    } else {
      PathSegment cut = seg;
      cut.length = s_cut - acc;
      if (cut.length > 1.0e-12) {
        out.segments.push_back(cut);
      }
      return out;
    }
    acc += seg.length;
  }
  return out;
}

Path reverse_path(const Path & p)
{
  Path out;
  out.segments.reserve(p.segments.size());
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it) {
    PathSegment rev;
    rev.kind = it->kind;
    rev.length = it->length;
    rev.direction = opposite(it->direction);
    rev.on_target_tree = it->on_target_tree;
    // kappa_rev(u) = -kappa(L - u): start at the negated end curvature,
    // keep the same sharpness.
    rev.start_kappa = -it->end_kappa();
    rev.sigma = it->sigma;
    rev.start_pose = it->end_pose();
    rev.start_pose.kappa = rev.start_kappa;
    out.segments.push_back(rev);
  }
  return out;
}

namespace {

std::string describe_joint(std::size_t i, const char * what, double value)
{
  std::ostringstream os;
  os << "joint " << i << ": " << what << " = " << value;
  return os.str();
}

}  // namespace

PathCheckResult check_path(const Path & p, const VehicleParams & params,
                           const PathCheckOptions & opt)
{
  PathCheckResult res;
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    const auto & seg = p.segments[i];
    if (seg.length < -1.0e-12) {
      return {false, describe_joint(i, "negative segment length", seg.length)};
    }
    if (std::abs(seg.sigma) > params.sigma_max + opt.kappa_tol) {
      return {false, describe_joint(i, "sharpness above limit", seg.sigma)};
    }
    const double k0 = std::abs(seg.start_kappa);
    const double k1 = std::abs(seg.end_kappa());
    if (std::max(k0, k1) > params.kappa_max + opt.kappa_tol) {
      return {false, describe_joint(i, "curvature above limit", std::max(k0, k1))};
    }
    if (i > 0) {
      const auto & prev = p.segments[i - 1];
      const Pose pe = prev.end_pose();
      const Pose ss = seg.start_pose;
      const double dpos = std::hypot(pe.x - ss.x, pe.y - ss.y);
      if (dpos > opt.joint_pos_tol) {
        return {false, describe_joint(i, "position discontinuity", dpos)};
      }
      const double dth = std::abs(angle_diff(pe.theta, ss.theta));
      if (dth > opt.joint_angle_tol) {
        return {false, describe_joint(i, "heading discontinuity", dth)};
      }
      if (prev.direction == seg.direction) {
        const double dk = std::abs(prev.end_kappa() - seg.start_kappa);
        if (dk > opt.kappa_tol) {
          return {false, describe_joint(i, "curvature discontinuity", dk)};
        }
      }
    }
  }
  // Sampled scan: curvature magnitude and per-direction-run rate bound.
  double prev_kappa = 0.0;
  double prev_s = 0.0;
  bool have_prev = false;
  Direction prev_dir = Direction::Forward;
  double base = 0.0;
  for (const auto & seg : p.segments) {
    const auto samples = sample_segment(seg, opt.sample_ds);
    for (const auto & [s, pose] : samples) {
      const double abs_k = std::abs(pose.kappa);
      if (abs_k > params.kappa_max + opt.kappa_tol) {
        return {false, describe_joint(0, "sampled curvature above limit", abs_k)};
      }
      if (have_prev && prev_dir == seg.direction) {
        const double dk = std::abs(pose.kappa - prev_kappa);
        const double dss = (base + s) - prev_s;
        if (dk > params.sigma_max * dss + opt.delta_kappa_tol) {
          return {false, describe_joint(0, "curvature rate above limit", dk)};
        }
      }
      prev_kappa = pose.kappa;
      prev_s = base + s;
      prev_dir = seg.direction;
      have_prev = true;
    }
    base += seg.length;
  }
  return res;
}

}  // namespace ccpark
