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

#include "ccpark/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ccpark {

namespace {

using nlohmann::json;

double edge_point_distance(const Vec2 & a, const Vec2 & b, const Vec2 & p)
{
  const Vec2 ab = b - a;
  const double len2 = ab.dot(ab);
  if (len2 < 1.0e-18) {
    return (p - a).norm();
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + ab * t)).norm();
}

// Project a polygon onto an axis.
void project(const ConvexPolygon & poly, const Vec2 & axis, double & lo, double & hi)
{
  lo = hi = poly[0].dot(axis);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double v = poly[i].dot(axis);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
}

bool separated_by_edges(const ConvexPolygon & a, const ConvexPolygon & b)
{
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec2 e = a[(i + 1) % a.size()] - a[i];
    const Vec2 axis{-e.y, e.x};
    double alo, ahi, blo, bhi;
    project(a, axis, alo, ahi);
    project(b, axis, blo, bhi);
    if (ahi < blo || bhi < alo) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_convex_ccw(const ConvexPolygon & poly)
{
  const std::size_t n = poly.size();
  if (n < 3) {
    return false;
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 & a = poly[i];
    const Vec2 & b = poly[(i + 1) % n];
    const Vec2 & c = poly[(i + 2) % n];
    const double cross = (b - a).cross(c - b);
    if (cross < -1.0e-12) {
      return false;
    }
    if (cross > 1.0e-12) {
      any_positive = true;
    }
  }
  return any_positive;
}

ConvexPolygon inflate_polygon(const ConvexPolygon & poly, double margin)
{
  if (margin == 0.0) {
    return poly;
  }
  const std::size_t n = poly.size();
  ConvexPolygon out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 & prev = poly[(i + n - 1) % n];
    const Vec2 & cur = poly[i];
    const Vec2 & next = poly[(i + 1) % n];
    // Outward normals of the two incident edges (CCW polygon).
    Vec2 e0 = cur - prev;
    Vec2 e1 = next - cur;
    const double l0 = e0.norm();
    const double l1 = e1.norm();
    Vec2 n0{e0.y / l0, -e0.x / l0};
    Vec2 n1{e1.y / l1, -e1.x / l1};
    // Miter offset: intersection of the two shifted edge lines.
    Vec2 bis = n0 + n1;
    const double denom = 1.0 + n0.dot(n1);
    out[i] = cur + bis * (margin / std::max(denom, 1.0e-9));
  }
  return out;
}

bool polygons_intersect(const ConvexPolygon & a, const ConvexPolygon & b)
{
  return !separated_by_edges(a, b) && !separated_by_edges(b, a);
}

double polygon_distance(const ConvexPolygon & a, const ConvexPolygon & b)
{
  if (polygons_intersect(a, b)) {
    return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec2 & p0 = a[i];
    const Vec2 & p1 = a[(i + 1) % a.size()];
    for (const Vec2 & q : b) {
      best = std::min(best, edge_point_distance(p0, p1, q));
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Vec2 & p0 = b[i];
    const Vec2 & p1 = b[(i + 1) % b.size()];
    for (const Vec2 & q : a) {
      best = std::min(best, edge_point_distance(p0, p1, q));
    }
  }
  return best;
}

void Scenario::validate() const
{
  vehicle.validate();
  planner.validate();
  if (bounds.xmax <= bounds.xmin || bounds.ymax <= bounds.ymin) {
    throw ScenarioError("bounds: must span a positive area");
  }
  if (!bounds.contains(spot.goal.position())) {
    throw ScenarioError("spot.goal: must lie inside bounds");
  }
  if (!bounds.contains(start.position())) {
    throw ScenarioError("start: must lie inside bounds");
  }
  if (spot.goal.kappa != 0.0 || start.kappa != 0.0) {
    throw ScenarioError("start and spot.goal must have zero curvature");
  }
  if (spot.length <= 0.0 || spot.width <= 0.0) {
    throw ScenarioError("spot.length and spot.width must be positive");
  }
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    if (!is_convex_ccw(obstacles[i])) {
      std::ostringstream os;
      os << "obstacles[" << i << "]: must be convex with at least 3 non-collinear "
         << "vertices in counter-clockwise order";
      throw ScenarioError(os.str());
    }
  }
}

namespace {

void reject_unknown_keys(const json & obj, const std::set<std::string> & known,
                         const std::string & context)
{
  for (const auto & item : obj.items()) {
    if (known.find(item.key()) == known.end()) {
      throw ScenarioError(context + ": unknown key '" + item.key() + "'");
    }
  }
}

double require_number(const json & obj, const std::string & key, const std::string & context)
{
  if (!obj.contains(key)) {
    throw ScenarioError(context + ": missing required field '" + key + "'");
  }
  if (!obj[key].is_number()) {
    throw ScenarioError(context + ": field '" + key + "' must be a number");
  }
  return obj[key].get<double>();
}

Pose parse_pose3(const json & arr, const std::string & context)
{
  if (!arr.is_array() || arr.size() != 3) {
    throw ScenarioError(context + ": expected [x, y, theta]");
  }
  return Pose{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>(), 0.0};
}

}  // namespace

Scenario load_scenario(const std::string & text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error & e) {
    throw ScenarioError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ScenarioError("document root must be an object");
  }
  reject_unknown_keys(doc, {"bounds", "obstacles", "spot", "start", "vehicle", "planner", "seed"},
                      "root");

  Scenario scn;

  if (!doc.contains("bounds") || !doc["bounds"].is_array() || doc["bounds"].size() != 4) {
    throw ScenarioError("bounds: expected [xmin, ymin, xmax, ymax]");
  }
  scn.bounds = {doc["bounds"][0].get<double>(), doc["bounds"][1].get<double>(),
                doc["bounds"][2].get<double>(), doc["bounds"][3].get<double>()};

  if (doc.contains("obstacles")) {
    if (!doc["obstacles"].is_array()) {
      throw ScenarioError("obstacles: expected an array of polygons");
    }
    for (const auto & poly_json : doc["obstacles"]) {
      ConvexPolygon poly;
      for (const auto & pt : poly_json) {
        if (!pt.is_array() || pt.size() != 2) {
          throw ScenarioError("obstacles: each vertex must be [x, y]");
        }
        poly.push_back({pt[0].get<double>(), pt[1].get<double>()});
      }
      scn.obstacles.push_back(std::move(poly));
    }
  }

  if (!doc.contains("spot") || !doc["spot"].is_object()) {
    throw ScenarioError("spot: missing required object");
  }
  const json & spot = doc["spot"];
  reject_unknown_keys(spot, {"goal", "length", "width", "mode"}, "spot");
  if (!spot.contains("goal")) {
    throw ScenarioError("spot: missing required field 'goal'");
  }
  scn.spot.goal = parse_pose3(spot["goal"], "spot.goal");
  scn.spot.length = require_number(spot, "length", "spot");
  scn.spot.width = require_number(spot, "width", "spot");
  if (!spot.contains("mode") || !spot["mode"].is_string()) {
    throw ScenarioError("spot: missing required field 'mode'");
  }
  const std::string mode = spot["mode"].get<std::string>();
  if (mode == "perpendicular") {
    scn.spot.mode = SpotMode::Perpendicular;
  } else if (mode == "parallel") {
    scn.spot.mode = SpotMode::Parallel;
  } else {
    throw ScenarioError("spot.mode: must be 'perpendicular' or 'parallel'");
  }

  if (!doc.contains("start")) {
    throw ScenarioError("start: missing required field");
  }
  scn.start = parse_pose3(doc["start"], "start");

  if (!doc.contains("vehicle") || !doc["vehicle"].is_object()) {
    throw ScenarioError("vehicle: missing required object");
  }
  const json & veh = doc["vehicle"];
  reject_unknown_keys(
      veh, {"wheelbase_L", "body_length", "body_width", "rear_overhang", "kappa_max", "sigma_max"},
      "vehicle");
  scn.vehicle.wheelbase_L = require_number(veh, "wheelbase_L", "vehicle");
  scn.vehicle.body_length = require_number(veh, "body_length", "vehicle");
  scn.vehicle.body_width = require_number(veh, "body_width", "vehicle");
  scn.vehicle.rear_overhang = require_number(veh, "rear_overhang", "vehicle");
  scn.vehicle.kappa_max = require_number(veh, "kappa_max", "vehicle");
  scn.vehicle.sigma_max = require_number(veh, "sigma_max", "vehicle");

  if (doc.contains("planner")) {
    const json & pl = doc["planner"];
    if (!pl.is_object()) {
      throw ScenarioError("planner: expected an object");
    }
    reject_unknown_keys(pl,
                        {"t_max", "iter_max", "tau", "steer_step", "rewire_gamma",
                         "near_radius_max", "ds_col", "w_xy", "w_theta", "obstacle_margin",
                         "grid_cell", "alpha", "n_branches", "goal_ds", "max_turn_angle",
                         "clearance_margin", "max_arc_pairs", "parallel_exit_left"},
                        "planner");
    PlannerConfig & cfg = scn.planner;
    if (pl.contains("t_max")) cfg.t_max = pl["t_max"].get<double>();
    if (pl.contains("iter_max")) cfg.iter_max = pl["iter_max"].get<long>();
    if (pl.contains("tau")) cfg.tau = pl["tau"].get<double>();
    if (pl.contains("steer_step")) cfg.steer_step = pl["steer_step"].get<double>();
    if (pl.contains("rewire_gamma")) cfg.rewire_gamma = pl["rewire_gamma"].get<double>();
    if (pl.contains("near_radius_max")) cfg.near_radius_max = pl["near_radius_max"].get<double>();
    if (pl.contains("ds_col")) cfg.ds_col = pl["ds_col"].get<double>();
    if (pl.contains("w_xy")) cfg.w_xy = pl["w_xy"].get<double>();
    if (pl.contains("w_theta")) cfg.w_theta = pl["w_theta"].get<double>();
    if (pl.contains("obstacle_margin")) cfg.obstacle_margin = pl["obstacle_margin"].get<double>();
    if (pl.contains("grid_cell")) cfg.grid_cell = pl["grid_cell"].get<double>();
    if (pl.contains("alpha")) cfg.tree.alpha = pl["alpha"].get<double>();
    if (pl.contains("n_branches")) cfg.tree.n_branches_per_side = pl["n_branches"].get<int>();
    if (pl.contains("goal_ds")) cfg.tree.goal_ds = pl["goal_ds"].get<double>();
    if (pl.contains("max_turn_angle")) cfg.tree.max_turn_angle = pl["max_turn_angle"].get<double>();
    if (pl.contains("clearance_margin"))
      cfg.tree.clearance_margin = pl["clearance_margin"].get<double>();
    if (pl.contains("max_arc_pairs")) cfg.tree.max_arc_pairs = pl["max_arc_pairs"].get<int>();
    if (pl.contains("parallel_exit_left"))
      cfg.tree.parallel_exit_left = pl["parallel_exit_left"].get<bool>();
  }
  if (!scn.planner.t_max && !scn.planner.iter_max) {
    scn.planner.iter_max = 3000;
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw ScenarioError("seed: must be an unsigned integer");
    }
    scn.seed = doc["seed"].get<std::uint64_t>();
  }

  scn.validate();
  return scn;
}

Scenario load_scenario_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open scenario file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scenario(ss.str());
}

std::string scenario_to_json(const Scenario & scn)
{
  json doc;
  doc["bounds"] = {scn.bounds.xmin, scn.bounds.ymin, scn.bounds.xmax, scn.bounds.ymax};
  doc["obstacles"] = json::array();
  for (const auto & poly : scn.obstacles) {
    json p = json::array();
    for (const auto & v : poly) {
      p.push_back({v.x, v.y});
    }
    doc["obstacles"].push_back(p);
  }
  doc["spot"] = {{"goal", {scn.spot.goal.x, scn.spot.goal.y, scn.spot.goal.theta}},
                 {"length", scn.spot.length},
                 {"width", scn.spot.width},
                 {"mode", scn.spot.mode == SpotMode::Perpendicular ? "perpendicular" : "parallel"}};
  doc["start"] = {scn.start.x, scn.start.y, scn.start.theta};
  doc["vehicle"] = {{"wheelbase_L", scn.vehicle.wheelbase_L},
                    {"body_length", scn.vehicle.body_length},
                    {"body_width", scn.vehicle.body_width},
                    {"rear_overhang", scn.vehicle.rear_overhang},
                    {"kappa_max", scn.vehicle.kappa_max},
                    {"sigma_max", scn.vehicle.sigma_max}};
  json pl;
  if (scn.planner.t_max) pl["t_max"] = *scn.planner.t_max;
  if (scn.planner.iter_max) pl["iter_max"] = *scn.planner.iter_max;
  pl["tau"] = scn.planner.tau;
  pl["steer_step"] = scn.planner.steer_step;
  pl["rewire_gamma"] = scn.planner.rewire_gamma;
  pl["near_radius_max"] = scn.planner.near_radius_max;
  pl["ds_col"] = scn.planner.ds_col;
  pl["w_xy"] = scn.planner.w_xy;
  pl["w_theta"] = scn.planner.w_theta;
  pl["obstacle_margin"] = scn.planner.obstacle_margin;
  pl["grid_cell"] = scn.planner.grid_cell;
  pl["alpha"] = scn.planner.tree.alpha;
  pl["n_branches"] = scn.planner.tree.n_branches_per_side;
  pl["goal_ds"] = scn.planner.tree.goal_ds;
  pl["max_turn_angle"] = scn.planner.tree.max_turn_angle;
  pl["clearance_margin"] = scn.planner.tree.clearance_margin;
  pl["max_arc_pairs"] = scn.planner.tree.max_arc_pairs;
  pl["parallel_exit_left"] = scn.planner.tree.parallel_exit_left;
  doc["planner"] = pl;
  doc["seed"] = scn.seed;
  return doc.dump(2);
}

CollisionChecker::CollisionChecker(BoundsRect bounds, std::vector<ConvexPolygon> obstacles,
                                   double cell_size, double inflation)
: bounds_(bounds), cell_size_(cell_size), inflation_(inflation)
{
  obstacles_.reserve(obstacles.size());
  for (auto & poly : obstacles) {
    obstacles_.push_back(inflation != 0.0 ? inflate_polygon(poly, inflation) : std::move(poly));
  }
  // Keep the index bounded for very large workspaces.
  cell_size_ = std::max(cell_size_, std::max(bounds_.width(), bounds_.height()) / 1024.0);
  nx_ = std::max(1, static_cast<int>(std::ceil(bounds_.width() / cell_size_)));
  ny_ = std::max(1, static_cast<int>(std::ceil(bounds_.height() / cell_size_)));
  cells_.resize(static_cast<std::size_t>(nx_) * ny_);
  for (int idx = 0; idx < static_cast<int>(obstacles_.size()); ++idx) {
    double xlo = obstacles_[idx][0].x, xhi = xlo, ylo = obstacles_[idx][0].y, yhi = ylo;
    for (const auto & v : obstacles_[idx]) {
      xlo = std::min(xlo, v.x);
      xhi = std::max(xhi, v.x);
      ylo = std::min(ylo, v.y);
      yhi = std::max(yhi, v.y);
    }
    const int cx0 = std::clamp(static_cast<int>((xlo - bounds_.xmin) / cell_size_), 0, nx_ - 1);
    const int cx1 = std::clamp(static_cast<int>((xhi - bounds_.xmin) / cell_size_), 0, nx_ - 1);
    const int cy0 = std::clamp(static_cast<int>((ylo - bounds_.ymin) / cell_size_), 0, ny_ - 1);
    const int cy1 = std::clamp(static_cast<int>((yhi - bounds_.ymin) / cell_size_), 0, ny_ - 1);
    for (int cy = cy0; cy <= cy1; ++cy) {
      for (int cx = cx0; cx <= cx1; ++cx) {
        cells_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(idx);
      }
    }
  }
}

CollisionChecker CollisionChecker::for_scenario(const Scenario & scn)
{
  return CollisionChecker(scn.bounds, scn.obstacles, scn.planner.grid_cell,
                          scn.planner.obstacle_margin);
}

std::vector<int> CollisionChecker::candidates_near(const ConvexPolygon & quad) const
{
  double xlo = quad[0].x, xhi = xlo, ylo = quad[0].y, yhi = ylo;
  for (const auto & v : quad) {
    xlo = std::min(xlo, v.x);
    xhi = std::max(xhi, v.x);
    ylo = std::min(ylo, v.y);
    yhi = std::max(yhi, v.y);
  }
  const int cx0 = std::clamp(static_cast<int>((xlo - bounds_.xmin) / cell_size_), 0, nx_ - 1);
  const int cx1 = std::clamp(static_cast<int>((xhi - bounds_.xmin) / cell_size_), 0, nx_ - 1);
  const int cy0 = std::clamp(static_cast<int>((ylo - bounds_.ymin) / cell_size_), 0, ny_ - 1);
  const int cy1 = std::clamp(static_cast<int>((yhi - bounds_.ymin) / cell_size_), 0, ny_ - 1);
  std::vector<int> out;
  for (int cy = cy0; cy <= cy1; ++cy) {
    for (int cx = cx0; cx <= cx1; ++cx) {
      for (int idx : cells_[static_cast<std::size_t>(cy) * nx_ + cx]) {
        if (std::find(out.begin(), out.end(), idx) == out.end()) {
          out.push_back(idx);
        }
      }
    }
  }
  return out;
}

bool CollisionChecker::pose_free(const VehicleParams & params, const Pose & pose) const
{
  const Footprint fp = footprint_at(params, pose);
  ConvexPolygon quad{fp.corners.begin(), fp.corners.end()};
  for (const auto & corner : quad) {
    if (!bounds_.contains(corner)) {
      return false;
    }
  }
  for (int idx : candidates_near(quad)) {
    if (polygons_intersect(quad, obstacles_[idx])) {
      return false;
    }
  }
  return true;
}

bool CollisionChecker::pose_free_brute(const VehicleParams & params, const Pose & pose) const
{
  const Footprint fp = footprint_at(params, pose);
  ConvexPolygon quad{fp.corners.begin(), fp.corners.end()};
  for (const auto & corner : quad) {
    if (!bounds_.contains(corner)) {
      return false;
    }
  }
  for (const auto & obs : obstacles_) {
    if (polygons_intersect(quad, obs)) {
      return false;
    }
  }
  return true;
}

bool CollisionChecker::path_free(const VehicleParams & params, const Path & path,
                                 double ds_col) const
{
  if (path.segments.empty()) {
    return true;
  }
  for (const auto & [s, pose] : sample_path(path, ds_col)) {
    if (!pose_free(params, pose)) {
      return false;
    }
  }
  return true;
}

double CollisionChecker::footprint_clearance(const VehicleParams & params, const Pose & pose) const
{
  const Footprint fp = footprint_at(params, pose);
  ConvexPolygon quad{fp.corners.begin(), fp.corners.end()};
  double best = std::numeric_limits<double>::infinity();
  for (const auto & obs : obstacles_) {
    best = std::min(best, polygon_distance(quad, obs));
  }
  return best;
}

}  // namespace ccpark
