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

#include "nctorus/nc_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace nctorus {

namespace {

std::string pair_text(int n, int m) {
  return "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
}

}  // namespace

BezoutPair bezout(int n, int m) {
  if (std::gcd(n, m) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd" + pair_text(n, m) + " != 1");
  }
  if (m == 0) return {n, 0, n, m};
  const long long mod = std::llabs(static_cast<long long>(m));
  // Extended Euclid for a*n == 1 (mod |m|).
  long long old_r = ((n % mod) + mod) % mod, r = mod;
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  long long a = ((old_s % mod) + mod) % mod;
  if (a == 0) a = mod;
  const long long b = (a * n - 1) / m;
  return {static_cast<int>(a), static_cast<int>(b), n, m};
}

BezoutPair bezout_from(int a, int b, int n, int m) {
  BezoutPair pair{a, b, n, m};
  if (!pair.valid()) {
    throw Error(ErrorKind::NotCoprime,
                "a*n - b*m != 1 for (a, b) = " + pair_text(a, b) + ", (n, m) = " + pair_text(n, m));
  }
  return pair;
}

TorusElement TorusElement::monomial(Mode mode, Complex amplitude) {
  TorusElement f;
  f.add(mode, amplitude);
  return f;
}

Complex TorusElement::coefficient(Mode mode) const {
  auto it = coeffs_.find(mode);
  return it == coeffs_.end() ? Complex{} : it->second;
}

TorusElement& TorusElement::add(Mode mode, Complex amplitude) {
  auto [it, inserted] = coeffs_.try_emplace(mode, amplitude);
  if (!inserted) it->second += amplitude;
  if (it->second == Complex{}) coeffs_.erase(it);
  return *this;
}

TorusElement operator+(const TorusElement& f, const TorusElement& g) {
  TorusElement out = f;
  for (const auto& [mode, c] : g.coeffs_) out.add(mode, c);
  return out;
}

TorusElement operator-(const TorusElement& f, const TorusElement& g) {
  TorusElement out = f;
  for (const auto& [mode, c] : g.coeffs_) out.add(mode, -c);
  return out;
}

TorusElement operator*(Complex scalar, const TorusElement& f) {
  TorusElement out;
  for (const auto& [mode, c] : f.coeffs_) out.add(mode, scalar * c);
  return out;
}

Complex monomial_phase(Mode a, Mode b, double theta) {
  const long long cross = static_cast<long long>(a.n1) * b.n2 - static_cast<long long>(a.n2) * b.n1;
  const double angle = kPi * theta * static_cast<double>(cross);
  return {std::cos(angle), std::sin(angle)};
}

TorusElement mul(const TorusElement& f, const TorusElement& g, double theta) {
  TorusElement out;
  for (const auto& [a, ca] : f.coeffs()) {
    for (const auto& [b, cb] : g.coeffs()) {
      out.add(a + b, ca * cb * monomial_phase(a, b, theta));
    }
  }
  return out;
}

TorusElement involution(const TorusElement& f) {
  TorusElement out;
  for (const auto& [mode, c] : f.coeffs()) out.add(-mode, std::conj(c));
  return out;
}

Complex trace(const TorusElement& f) { return f.coefficient({0, 0}); }

TorusElement derivation(const TorusElement& f, int axis) {
  if (axis != 1 && axis != 2) {
    throw Error(ErrorKind::IndexOutOfRange, "derivation axis must be 1 or 2, got " + std::to_string(axis));
  }
  TorusElement out;
  for (const auto& [mode, c] : f.coeffs()) {
    const int component = axis == 1 ? mode.n1 : mode.n2;
    out.add(mode, 2.0 * kPi * kI * static_cast<double>(component) * c);
  }
  return out;
}

double theta_prime(double theta, const BezoutPair& pair) {
  const double denom = pair.n + pair.m * theta;
  if (denom == 0.0) throw Error(ErrorKind::DegenerateDenominator, "n + m*theta == 0");
  return (pair.b + pair.a * theta) / denom;
}

double theta_double_prime(double theta, const BezoutPair& pair) {
  const double denom = pair.n - pair.m * theta;
  if (denom == 0.0) throw Error(ErrorKind::DegenerateDenominator, "k - l*theta == 0");
  return -(pair.b - pair.a * theta) / denom;
}

double max_abs_difference(const TorusElement& f, const TorusElement& g) {
  double worst = 0.0;
  const TorusElement diff = f - g;
  for (const auto& [mode, c] : diff.coeffs()) worst = std::max(worst, std::abs(c));
  return worst;
}

}  // namespace nctorus
