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

#ifndef NCTORUS_GAUSSIAN_SPACE_HPP
#define NCTORUS_GAUSSIAN_SPACE_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "nctorus/common.hpp"

namespace nctorus {

// poly(x) * exp(-sigma x^2 / 2 - c x) supported on the component mu of Z_m.
// poly[k] is the coefficient of x^k.
struct PolyGaussTerm {
  std::vector<Complex> poly;
  Complex sigma{1.0};
  Complex c{};
  int mu = 0;

  Complex evaluate(double x) const;
};

// A finite sum of PolyGaussTerms: an exactly representable element of the
// Schwartz space S(R x Z_m). Terms with matching (sigma, c, mu) are merged
// and coefficients that cancel to rounding level are pruned, so v - v is the
// empty vector.
class PolyGaussVector {
 public:
  // The zero vector with m components.
  explicit PolyGaussVector(int m);
  PolyGaussVector(int m, std::vector<PolyGaussTerm> terms);

  static PolyGaussVector gaussian(int m, int mu, Complex sigma, Complex c, Complex amplitude = 1.0);

  int components() const { return m_; }
  const std::vector<PolyGaussTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  friend class TermAccumulator;
  PolyGaussVector(int m, std::vector<PolyGaussTerm> terms, bool trusted);

  int m_;
  std::vector<PolyGaussTerm> terms_;
};

Complex evaluate(const PolyGaussVector& v, double x, int mu);

// x -> v(x - s, mu)
PolyGaussVector shift(const PolyGaussVector& v, double s);
// x -> e^{beta x} v(x, mu)
PolyGaussVector mul_exp(const PolyGaussVector& v, Complex beta);
// x -> x v(x, mu)
PolyGaussVector mul_x(const PolyGaussVector& v);
PolyGaussVector differentiate(const PolyGaussVector& v);
// alpha * v + w
PolyGaussVector axpy(Complex alpha, const PolyGaussVector& v, const PolyGaussVector& w);
PolyGaussVector scale(const PolyGaussVector& v, Complex alpha);
// (x, mu) -> v(x, mu - steps)
PolyGaussVector rotate_components(const PolyGaussVector& v, int steps);
// (x, mu) -> phase(mu) v(x, mu)
PolyGaussVector component_phase(const PolyGaussVector& v, const std::function<Complex(int)>& phase);

PolyGaussVector operator+(const PolyGaussVector& v, const PolyGaussVector& w);
PolyGaussVector operator-(const PolyGaussVector& v, const PolyGaussVector& w);
PolyGaussVector operator*(Complex alpha, const PolyGaussVector& v);

// Deterministic probe points x = -5, -4.75, ..., 5.
std::span<const double> probe_points();

// Maxima over probe_points() x Z_m.
double max_abs(const PolyGaussVector& v);
double max_abs_difference(const PolyGaussVector& v, const PolyGaussVector& w);

// max |v - w| <= tol * (1 + max |v|) on the probe grid.
bool approx_eq(const PolyGaussVector& v, const PolyGaussVector& w, double tol);

}  // namespace nctorus

#endif  // NCTORUS_GAUSSIAN_SPACE_HPP
