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

#ifndef NCTORUS_NC_ALGEBRA_HPP
#define NCTORUS_NC_ALGEBRA_HPP

#include <compare>
#include <map>

#include "nctorus/common.hpp"

namespace nctorus {

// Lattice index (n1, n2) of the monomial U_(n1,n2).
struct Mode {
  int n1 = 0;
  int n2 = 0;

  auto operator<=>(const Mode&) const = default;

  friend Mode operator+(Mode a, Mode b) { return {a.n1 + b.n1, a.n2 + b.n2}; }
  friend Mode operator-(Mode a) { return {-a.n1, -a.n2}; }
};

// Integers with a*n - b*m == 1.
struct BezoutPair {
  int a = 1;
  int b = 0;
  int n = 1;
  int m = 0;

  bool valid() const { return static_cast<long long>(a) * n - static_cast<long long>(b) * m == 1; }
};

// Canonical pair: 1 <= a <= |m| for m != 0, (a, b) = (n, 0) for m == 0.
// Throws NotCoprime when gcd(n, m) != 1.
BezoutPair bezout(int n, int m);

// Builds a pair from user-supplied (a, b); throws NotCoprime if a*n - b*m != 1.
BezoutPair bezout_from(int a, int b, int n, int m);

// Finite Fourier series sum C_n U_n over Z^2. Zero amplitudes are dropped.
class TorusElement {
 public:
  TorusElement() = default;

  static TorusElement monomial(Mode mode, Complex amplitude = 1.0);
  static TorusElement unit() { return monomial({0, 0}); }

  const std::map<Mode, Complex>& coeffs() const { return coeffs_; }
  Complex coefficient(Mode mode) const;
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Adds amplitude to the coefficient at mode.
  TorusElement& add(Mode mode, Complex amplitude);

  friend TorusElement operator+(const TorusElement& f, const TorusElement& g);
  friend TorusElement operator-(const TorusElement& f, const TorusElement& g);
  friend TorusElement operator*(Complex scalar, const TorusElement& f);

 private:
  std::map<Mode, Complex> coeffs_;
};

// e^{pi i theta (a1 b2 - a2 b1)}: the phase in U_a U_b = phase * U_{a+b}.
Complex monomial_phase(Mode a, Mode b, double theta);

TorusElement mul(const TorusElement& f, const TorusElement& g, double theta);
TorusElement involution(const TorusElement& f);
Complex trace(const TorusElement& f);

// delta_axis U_n = 2 pi i n_axis U_n, axis in {1, 2}.
TorusElement derivation(const TorusElement& f, int axis);

// (b + a theta) / (n + m theta)
double theta_prime(double theta, const BezoutPair& pair);
// -(d - c theta) / (k - l theta) for the pair (c, d) of (k, l).
double theta_double_prime(double theta, const BezoutPair& pair);

// Largest coefficient-wise |f - g|.
double max_abs_difference(const TorusElement& f, const TorusElement& g);

}  // namespace nctorus

#endif  // NCTORUS_NC_ALGEBRA_HPP
