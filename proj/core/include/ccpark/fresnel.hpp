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

#ifndef CCPARK_FRESNEL_HPP
#define CCPARK_FRESNEL_HPP

#include "ccpark/geometry.hpp"

namespace ccpark {

struct FresnelPair {
  double c{0.0};  // C_f(s) = int_0^s cos(pi u^2 / 2) du
  double s{0.0};  // S_f(s) = int_0^s sin(pi u^2 / 2) du
};

/// Fresnel integrals with the pi/2 normalization. Odd in the argument;
/// absolute accuracy is well below 1e-10 over the range used here.
FresnelPair fresnel(double s);

/// Planar displacement of a constant-sharpness curve: the integrals
///   dx = int_0^s cos(kappa0 u + sigma u^2 / 2) du
///   dy = int_0^s sin(kappa0 u + sigma u^2 / 2) du
/// expressed in the frame of the starting heading. Handles the straight
/// (kappa0 = sigma = 0) and circular (sigma = 0) degenerations in closed
/// form, and the general case through Fresnel integrals.
Vec2 spiral_displacement(double kappa0, double sigma, double s);

}  // namespace ccpark

#endif  // CCPARK_FRESNEL_HPP
