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

#ifndef CCPARK_ENVIRONMENT_HPP
#define CCPARK_ENVIRONMENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccpark/geometry.hpp"
#include "ccpark/path.hpp"
#include "ccpark/planner_config.hpp"

namespace ccpark {

struct BoundsRect {
  double xmin{0.0};
  double ymin{0.0};
  double xmax{0.0};
  double ymax{0.0};

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  bool contains(const Vec2 & p) const
  {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

/// Convex polygon, counter-clockwise vertex order.
using ConvexPolygon = std::vector<Vec2>;

bool is_convex_ccw(const ConvexPolygon & poly);
ConvexPolygon inflate_polygon(const ConvexPolygon & poly, double margin);
/// True when the (closed) polygons share at least one point.
bool polygons_intersect(const ConvexPolygon & a, const ConvexPolygon & b);
/// Euclidean distance between two convex polygons (0 when intersecting).
double polygon_distance(const ConvexPolygon & a, const ConvexPolygon & b);

enum class SpotMode { Perpendicular, Parallel };

struct ParkingSpot {
  Pose goal;             // parked rear-axle pose (kappa = 0)
  double length{5.3};    // along the goal heading, meters
  double width{2.4};
  SpotMode mode{SpotMode::Perpendicular};
};

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  BoundsRect bounds;
  std::vector<ConvexPolygon> obstacles;
  ParkingSpot spot;
  Pose start;
  VehicleParams vehicle;
  PlannerConfig planner;
  std::uint64_t seed{0};

  void validate() const;
};

/// Parse and validate a scenario document (strict: unknown keys rejected).
Scenario load_scenario(const std::string & text);
Scenario load_scenario_file(const std::string & path);
std::string scenario_to_json(const Scenario & scn);

/// Obstacle set with a uniform-grid index. Immutable after construction;
/// concurrent read-only queries are safe.
class CollisionChecker {
 public:
  CollisionChecker(BoundsRect bounds, std::vector<ConvexPolygon> obstacles,
                   double cell_size = 1.0, double inflation = 0.0);

  static CollisionChecker for_scenario(const Scenario & scn);

  /// True when the footprint at `pose` stays inside the bounds and touches
  /// no obstacle (obstacles are closed sets: touching counts as collision).
  bool pose_free(const VehicleParams & params, const Pose & pose) const;

  /// Every pose sampled along the path at step ds_col (endpoints included)
  /// must be free.
  bool path_free(const VehicleParams & params, const Path & path, double ds_col) const;

  /// Smallest distance from the footprint to any obstacle (ignores bounds).
  double footprint_clearance(const VehicleParams & params, const Pose & pose) const;

  const BoundsRect & bounds() const { return bounds_; }
  const std::vector<ConvexPolygon> & obstacles() const { return obstacles_; }
  double inflation() const { return inflation_; }

  /// Index-free reference query, for equivalence testing.
  bool pose_free_brute(const VehicleParams & params, const Pose & pose) const;

 private:
  std::vector<int> candidates_near(const ConvexPolygon & quad) const;

  BoundsRect bounds_;
  std::vector<ConvexPolygon> obstacles_;
  double cell_size_;
  double inflation_;
  int nx_{0};
  int ny_{0};
  std::vector<std::vector<int>> cells_;
};

}  // namespace ccpark

#endif  // CCPARK_ENVIRONMENT_HPP
