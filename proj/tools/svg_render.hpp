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

#ifndef CCPARK_TOOLS_SVG_RENDER_HPP
#define CCPARK_TOOLS_SVG_RENDER_HPP

#include <optional>
#include <string>

#include "ccpark/environment.hpp"
#include "ccpark/io.hpp"
#include "ccpark/planner.hpp"

namespace ccpark {

struct RenderInputs {
  const Scenario * scenario{nullptr};
  const TreeDump * tree{nullptr};
  const SampledPath * path{nullptr};
  const PlannerTree * rrt{nullptr};
};

/// Scalable drawing of the environment: 1 m grid, obstacles, parking spot,
/// start/goal footprints, target-tree branches styled per segment family,
/// and the planned path.
std::string render_svg(const RenderInputs & in);

}  // namespace ccpark

#endif  // CCPARK_TOOLS_SVG_RENDER_HPP
