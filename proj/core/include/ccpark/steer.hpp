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

#ifndef CCPARK_STEER_HPP
#define CCPARK_STEER_HPP

#include <optional>

#include "ccpark/path.hpp"

namespace ccpark {

struct SteerOptions {
  /// Largest single-turn deflection the solver considers.
  double max_turn_deflection{1.75 * M_PI};
  /// Scan resolution for the turn-angle root search.
  int scan_points{96};
  /// Required endpoint accuracy (position, meters and heading, radians).
  double endpoint_tol{1.0e-6};
  /// Try a straight escape followed by a reversed connection when the
  /// direct families fail (adds one direction switch).
  bool allow_backoff{true};
  /// When set, the returned path's final segment must drive this way
  /// (used when the target is a tree pose that will be spliced).
  std::optional<Direction> required_final_direction{};
};

/// Exact continuous-curvature connection between two poses: clothoid turns
/// joined by straights, driven forward or backward, with at most one
/// direction switch. Curvature is continuous within each driving direction,
/// |kappa| <= kappa_max and |sigma| <= sigma_max throughout. Returns the
/// shortest construction found, or nullopt when none of the families reaches
/// the target.
std::optional<Path> cc_steer(const Pose & from, const Pose & to, const VehicleParams & params,
                             const SteerOptions & opt = {});

/// All exact connections found, shortest first. With `with_backoff` the
/// straight-escape-then-reverse family is included even when direct
/// connections exist, giving the caller collision fallbacks.
std::vector<Path> cc_steer_alternatives(const Pose & from, const Pose & to,
                                        const VehicleParams & params, const SteerOptions & opt,
                                        bool with_backoff, std::size_t max_count = 8);

}  // namespace ccpark

#endif  // CCPARK_STEER_HPP
