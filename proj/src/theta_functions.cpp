// Copyright 2026 The nctorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nctorus/theta_functions.hpp"

#include <cmath>
#include <limits>

namespace nctorus {

namespace {

void check_s(const ThetaParams& p) {
  if (!(p.s.imag() > 0.0)) throw Error(ErrorKind::InvalidS, "theta requires Im(s) > 0");
}

constexpr int kMaxRadius = 1 << 20;

}  // namespace

double theta_tail_bound(const ThetaParams& p, int radius) {
  check_s(p);
  // |term(u)| = exp(-pi S u^2 - 2 pi Im(t) u) <= exp(-pi S u^2 + 2 pi T |u|).
  const double S = p.s.imag();
  const double T = std::abs(p.t.imag());
  const double u = static_cast<double>(radius) + 1.0;
  // Ratio of consecutive majorant terms beyond the radius.
  const double log_ratio = -kPi * S * (2.0 * u + 1.0) + 2.0 * kPi * T;
  if (log_ratio >= 0.0) return std::numeric_limits<double>::infinity();
  const double first = std::exp(-kPi * S * u * u + 2.0 * kPi * T * u);
  return 2.0 * first / (1.0 - std::exp(log_ratio));
}

int theta_truncation_radius(const ThetaParams& p, double eps) {
  check_s(p);
  if (!(eps > 0.0)) throw Error(ErrorKind::IndexOutOfRange, "eps must be positive");
  int radius = static_cast<int>(std::ceil(std::abs(p.t.imag()) / p.s.imag()));
  while (theta_tail_bound(p, radius) >= eps) {
    if (radius >= kMaxRadius) throw Error(ErrorKind::NonConvergent, "theta series truncation radius too large");
    ++radius;
  }
  return radius;
}

Complex theta_truncated(const ThetaParams& p, int radius) {
  check_s(p);
  const Complex a = kI * kPi * p.s;
  const Complex b = 2.0 * kI * kPi * p.t;
  CompensatedSum sum;
  sum.add(1.0);
  for (int u = 1; u <= radius; ++u) {
    const double du = u;
    const Complex quad = a * du * du;
    sum.add(std::exp(quad + b * du));
    sum.add(std::exp(quad - b * du));
  }
  return sum.value();
}

Complex theta(const ThetaParams& p, double eps) {
  return theta_truncated(p, theta_truncation_radius(p, eps));
}

Complex theta_exp(const ThetaParams& p, Complex K, double eps) {
  if (!(p.s.imag() > 0.0)) throw Error(ErrorKind::InvalidS, "Im(s) must be positive");
  const double peak = std::round(-p.t.imag() / p.s.imag());
  const Complex shifted = p.t + p.s * peak;
  const Complex prefactor = kI * kPi * (p.s * peak * peak + 2.0 * p.t * peak);
  return theta({p.s, shifted}, eps) * std::exp(K + prefactor);
}

}  // namespace nctorus
