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

#ifndef NCTORUS_COMMON_HPP
#define NCTORUS_COMMON_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nctorus {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

enum class ErrorKind {
  NotCoprime,
  DegenerateDenominator,
  IndexOutOfRange,
  DimensionMismatch,
  WrongSide,
  SignAssumptionViolated,
  NoHolomorphicVectors,
  InvalidS,
  InvalidSigma,
  NonConvergent,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception. what() starts
// with the kind name so command-line callers can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Non-negative residue of value modulo a positive modulus.
constexpr int wrap_index(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

// Neumaier compensated summation, applied to real and imaginary parts.
class CompensatedSum {
 public:
  void add(Complex z) {
    add_part(sum_re_, comp_re_, z.real());
    add_part(sum_im_, comp_im_, z.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

}  // namespace nctorus

#endif  // NCTORUS_COMMON_HPP
