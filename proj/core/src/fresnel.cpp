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

#include "ccpark/fresnel.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace ccpark {

namespace {

constexpr double kSeriesSplit = 1.5;   // series below, continued fraction above
constexpr int kMaxIter = 120;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// Power series of both integrals around zero. Converges quickly for
// arguments below kSeriesSplit.
FresnelPair fresnel_series(double x)
{
  const double pio2 = M_PI / 2.0;
  const double x2 = x * x;
  // C term n: (-1)^n (pi/2)^(2n) x^(4n+1) / ((2n)! (4n+1))
  // S term n: (-1)^n (pi/2)^(2n+1) x^(4n+3) / ((2n+1)! (4n+3))
  double c_sum = 0.0;
  double s_sum = 0.0;
  double c_term = x;                 // n = 0 numerator for C (without 1/(4n+1))
  double s_term = pio2 * x2 * x;     // n = 0 numerator for S
  for (int n = 0; n < 60; ++n) {
    const double c_add = c_term / (4.0 * n + 1.0);
    const double s_add = s_term / (4.0 * n + 3.0);
    c_sum += c_add;
    s_sum += s_add;
    if (std::abs(c_add) < kEps && std::abs(s_add) < kEps) {
      break;
    }
    const double f = -pio2 * pio2 * x2 * x2;
    c_term *= f / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
    s_term *= f / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
  }
  return {c_sum, s_sum};
}

// Evaluation through the complex error-function continued fraction
// (modified Lentz), accurate for arguments above kSeriesSplit.
FresnelPair fresnel_continued_fraction(double x)
{
  using cplx = std::complex<double>;
  const double pix2 = M_PI * x * x;
  cplx b(1.0, -pix2);
  cplx cc(1.0 / kTiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  int n = -1;
  for (int k = 2; k <= kMaxIter; ++k) {
    n += 2;
    const double a = -static_cast<double>(n) * (n + 1);
    b += cplx(4.0, 0.0);
    d = 1.0 / (a * d + b);
    cc = b + a / cc;
    const cplx del = cc * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) {
      break;
    }
  }
  h *= cplx(x, -x);
  const cplx phase(std::cos(0.5 * pix2), std::sin(0.5 * pix2));
  const cplx cs = cplx(0.5, 0.5) * (1.0 - phase * h);
  return {cs.real(), cs.imag()};
}

}  // namespace

FresnelPair fresnel(double s)
{
  const double ax = std::abs(s);
  FresnelPair r;
  if (ax < 1.0e-12) {
    r = {ax, 0.0};
  } else if (ax <= kSeriesSplit) {
    r = fresnel_series(ax);
  } else {
    r = fresnel_continued_fraction(ax);
  }
  if (s < 0.0) {
    r.c = -r.c;
    r.s = -r.s;
  }
  return r;
}

Vec2 spiral_displacement(double kappa0, double sigma, double s)
{
  if (s == 0.0) {
    return {0.0, 0.0};
  }
  // Quadratic phase negligible: circular arc (or straight) closed form,
  // with the residual sharpness folded in as a midpoint curvature.
  if (std::abs(sigma) * s * s < 1.0e-9) {
    const double k = kappa0 + 0.5 * sigma * s;
    if (std::abs(k) * s < 1.0e-9) {
      const double phi = k * s;
      return {s * (1.0 - phi * phi / 6.0), 0.5 * s * phi};
    }
    return {std::sin(k * s) / k, (1.0 - std::cos(k * s)) / k};
  }
  const double sgn = sigma > 0.0 ? 1.0 : -1.0;
  const double w = std::sqrt(std::abs(sigma) / M_PI);
  const double shift = kappa0 / sigma;
  const FresnelPair f1 = fresnel(w * (s + shift));
  const FresnelPair f0 = fresnel(w * shift);
  const double dc = f1.c - f0.c;
  const double ds = f1.s - f0.s;
  // Heading along the curve: theta(u) = a + sgn * (pi/2) * (w (u + shift))^2
  const double a = -0.5 * kappa0 * kappa0 / sigma;
  const double ca = std::cos(a);
  const double sa = std::sin(a);
  return {(ca * dc - sgn * sa * ds) / w, (sa * dc + sgn * ca * ds) / w};
}

}  // namespace ccpark
