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

#ifndef NCTORUS_THETA_FUNCTIONS_HPP
#define NCTORUS_THETA_FUNCTIONS_HPP

#include "nctorus/common.hpp"

namespace nctorus {

// Theta(s, t) = sum_{u in Z} exp(pi i s u^2 + 2 pi i t u), Im(s) > 0.
struct ThetaParams {
  Complex s{0.0, 1.0};
  Complex t{};
};

// Certified bound on sum_{|u| > radius} |exp(pi i s u^2 + 2 pi i t u)|,
// using the geometric majorant of the Gaussian tail past its peak. Returns
// +inf while radius is still on the rising side of the terms.
double theta_tail_bound(const ThetaParams& p, int radius);

// Smallest radius whose tail bound is below eps.
int theta_truncation_radius(const ThetaParams& p, double eps);

// Symmetric partial sum over |u| <= radius, compensated accumulation.
Complex theta_truncated(const ThetaParams& p, int radius);

// Value within eps (absolute) of the full series. Throws InvalidS when
// Im(s) <= 0.
Complex theta(const ThetaParams& p, double eps = 1e-16);

// Theta(s, t) e^K, evaluated around the dominant term u* = round(-Im t / Im s)
// through Theta(s, t) = exp(pi i s u*^2 + 2 pi i t u*) Theta(s, t + s u*), so
// that neither factor overflows. eps is relative to the recentred series.
Complex theta_exp(const ThetaParams& p, Complex K, double eps = 1e-16);

}  // namespace nctorus

#endif  // NCTORUS_THETA_FUNCTIONS_HPP
