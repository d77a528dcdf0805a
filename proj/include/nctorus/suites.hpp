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

#ifndef NCTORUS_SUITES_HPP
#define NCTORUS_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nctorus/tensor_product.hpp"

namespace nctorus {

// Parameters shared by the randomized check suites the CLI runs.
struct SuiteConfig {
  double theta = 0.2;
  int n = 1, m = 2, k = 1, l = 3;
  std::optional<BezoutPair> bezout_nm;
  std::optional<BezoutPair> bezout_kl;
  ComplexStructure cs;
  double tol = 1e-9;
  int qmax = kDefaultQmax;
  std::uint64_t seed = 1;
  int instances = 20;
};

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  CheckStatus status = CheckStatus::passed;
  std::string note;
};

std::string_view to_string(CheckStatus status);

// Algebra laws of T_theta and the module/endomorphism phase laws.
std::vector<CheckResult> algebra_suite(const SuiteConfig& cfg);

// Descent identities of the product map, closed form against direct
// summation, and (when a common tau exists) the theta-basis expansion.
std::vector<CheckResult> verification_suite(const SuiteConfig& cfg);

// True when no check failed; skipped checks do not count as failures.
// Theta-basis expansion checks of the product: z-independence of the ratio
// to phi_gamma, closed-form constants against that ratio, the zero-entry law
// and reconstruction of the direct product map. Skipped when the complex
// structure admits no theta basis on one of the factors.
std::vector<CheckResult> structure_checks(const ProductParams& p, const ComplexStructure& cs, double tol,
                                          int qmax = kDefaultQmax);

bool all_passed(const std::vector<CheckResult>& results);

// Theta-factorized product of two Gaussians against direct summation:
// max over the standard probe grid of |closed - direct| / |direct| (absolute
// where direct is exactly zero).
double closed_form_residual(int alpha, int beta, Complex sigma1, Complex c1, Complex sigma2, Complex c2,
                            const ProductParams& p, int qmax = kDefaultQmax);

}  // namespace nctorus

#endif  // NCTORUS_SUITES_HPP
