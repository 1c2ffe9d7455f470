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

#include <doctest.h>

#include <random>

#include "ccpark/steer.hpp"
#include "oracles.hpp"

using namespace ccpark;

namespace {

double endpoint_gap(const Path & p, const Pose & from, const Pose & to)
{
  const Pose e = p.empty() ? from : p.end_pose();
  return std::max(std::hypot(e.x - to.x, e.y - to.y),
                  std::abs(angle_diff(e.theta, to.theta)));
}

}  // namespace

TEST_CASE("steer: identity and collinear cases")
{
  VehicleParams vp;
  const auto same = cc_steer(Pose{1.0, 2.0, 0.3, 0.0}, Pose{1.0, 2.0, 0.3, 0.0}, vp);
  REQUIRE(same.has_value());
  CHECK(same->length() == 0.0);

  const auto straight = cc_steer(Pose{0.0, 0.0, 0.0, 0.0}, Pose{10.0, 0.0, 0.0, 0.0}, vp);
  REQUIRE(straight.has_value());
  CHECK(straight->segments.size() == 1);
  CHECK(straight->segments[0].kind == SegmentKind::Straight);
  CHECK(straight->length() == doctest::Approx(10.0));

  const auto reverse = cc_steer(Pose{0.0, 0.0, 0.0, 0.0}, Pose{-4.0, 0.0, 0.0, 0.0}, vp);
  REQUIRE(reverse.has_value());
  CHECK(reverse->length() == doctest::Approx(4.0));
  CHECK(reverse->segments[0].direction == Direction::Backward);
}

TEST_CASE("steer reproduces a generated elementary turn at equal length")
{
  VehicleParams vp;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    Path gen;
    const Pose origin{0.0, 0.0, 0.0, 0.0};
    const double s_cl = vp.kappa_max / vp.sigma_max;
    const double arc_len = 0.5 + 5.0 * uni(rng);
    PathSegment c1 = make_clothoid(origin, 0.0, vp.sigma_max, s_cl, Direction::Forward);
    PathSegment a = make_arc(c1.end_pose(), vp.kappa_max, arc_len, Direction::Forward);
    PathSegment c2 = make_clothoid(a.end_pose(), vp.kappa_max, -vp.sigma_max, s_cl,
                                   Direction::Forward);
    gen.append(c1);
    gen.append(a);
    gen.append(c2);
    const auto steered = cc_steer(origin, gen.end_pose(), vp);
    REQUIRE(steered.has_value());
    CHECK(steered->length() <= 1.001 * gen.length());
    CHECK(endpoint_gap(*steered, origin, gen.end_pose()) <= 1.0e-6);
  }
}

TEST_CASE("steer round-trip over random valid paths")
{
  VehicleParams vp;
  std::mt19937_64 rng(42);
  int attempted = 0;
  for (int t = 0; t < 1000 && attempted < 600; ++t) {
    const Path gen = oracles::random_valid_path(rng, vp);
    if (gen.empty()) {
      continue;
    }
    const Pose target = gen.end_pose();
    if (std::hypot(target.x, target.y) < 1.0) {
      continue;
    }
    ++attempted;
    const Pose origin{0.0, 0.0, 0.0, 0.0};
    const auto steered = cc_steer(origin, target, vp);
    CAPTURE(target.x);
    CAPTURE(target.y);
    CAPTURE(target.theta);
    CAPTURE(target.kappa);
    REQUIRE(steered.has_value());
    CHECK(endpoint_gap(*steered, origin, target) <= 1.0e-6);
    CHECK(std::abs(steered->end_pose().kappa - target.kappa) <= 1.0e-6);
    const auto valid = check_path(*steered, vp);
    CAPTURE(valid.violation);
    CHECK(valid.ok);
    CHECK(steered->direction_switches() <= 2);
  }
  CHECK(attempted >= 400);
}

TEST_CASE("steer handles close awkward targets")
{
  VehicleParams vp;
  const Pose origin{0.0, 0.0, 0.0, 0.0};
  for (const Pose target : {Pose{0.5, 0.0, M_PI, 0.0}, Pose{1.0, 1.0, -M_PI_2, 0.0},
                            Pose{-2.0, 0.5, 0.2, 0.0}, Pose{0.0, 3.0, 0.0, 0.0},
                            Pose{2.0, -1.0, 2.5, 0.1}}) {
    const auto steered = cc_steer(origin, target, vp);
    CAPTURE(target.x);
    REQUIRE(steered.has_value());
    CHECK(endpoint_gap(*steered, origin, target) <= 1.0e-6);
    CHECK(check_path(*steered, vp).ok);
  }
}

TEST_CASE("steer honors a required final direction")
{
  VehicleParams vp;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const Pose from{0.0, 0.0, 0.0, 0.0};
    const Pose to{8.0 * uni(rng), 8.0 * uni(rng), M_PI * uni(rng),
                  vp.kappa_max * uni(rng)};
    for (Direction want : {Direction::Forward, Direction::Backward}) {
      SteerOptions opt;
      opt.required_final_direction = want;
      const auto steered = cc_steer(from, to, vp, opt);
      if (steered && !steered->empty()) {
        CHECK(steered->segments.back().direction == want);
      }
    }
  }
}

TEST_CASE("steer alternatives are sorted and reach the target")
{
  VehicleParams vp;
  const Pose from{0.0, 0.0, 0.0, 0.0};
  const Pose to{6.0, 3.0, 0.8, 0.0};
  const auto alts = cc_steer_alternatives(from, to, vp, SteerOptions{}, true, 8);
  REQUIRE(alts.size() >= 2);
  for (std::size_t i = 0; i < alts.size(); ++i) {
    CHECK(endpoint_gap(alts[i], from, to) <= 1.0e-6);
    if (i > 0) {
      CHECK(alts[i].length() >= alts[i - 1].length() - 1.0e-9);
    }
  }
}
