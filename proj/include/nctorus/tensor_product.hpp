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

#ifndef NCTORUS_TENSOR_PRODUCT_HPP
#define NCTORUS_TENSOR_PRODUCT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nctorus/connections.hpp"
#include "nctorus/theta_functions.hpp"

namespace nctorus {

// Data of the product E_{n,m}(theta) (x)_{T_theta} E'_{k,l}(theta), realized
// on S(R x Z_M), M = nl + mk.
//
// make() only requires coprimality and n + m theta != 0: the product map and
// its identities hold for either sign of the scales. Holomorphic operations
// (product_basis, structure_constants) additionally require
// n + m theta > 0 and k - l theta > 0.
struct ProductParams {
  int n = 1, m = 1, k = 1, l = 1;
  double theta = 0.0;
  BezoutPair bezout_nm;
  BezoutPair bezout_kl;
  BimoduleProfile profile;
  int r = 1;  // gcd(m, l)

  static ProductParams make(int n, int m, int k, int l, double theta,
                            std::optional<BezoutPair> nm_pair = {},
                            std::optional<BezoutPair> kl_pair = {});

  int M() const { return profile.M; }
  // Spacing ml/r of the solutions of the index congruences.
  int period() const { return m / r * l; }
  double right_scale() const { return n + m * theta; }
  double left_scale() const { return k - l * theta; }
  ModuleTag right_tag() const { return ModuleTag::right(n, m, theta, bezout_nm); }
  ModuleTag left_tag() const { return ModuleTag::left(k, l, theta, bezout_kl); }
};

// Throws SignAssumptionViolated unless n + m theta > 0 and k - l theta > 0.
void require_sign_assumptions(const ProductParams& p);

// Smallest q0 >= 0 with q0 = a Delta - alpha (mod m) and q0 = beta (mod l);
// empty when a Delta - alpha != beta (mod r).
std::optional<int> crt_q0(int alpha, int beta, int delta, const ProductParams& p);

inline constexpr int kDefaultQmax = 1 << 14;

// The product map
//   h(z, Delta) = sum_q f(R z - R q/m + l R Delta/(m M), a Delta - q)
//                     * g(R z + L q/l - L Delta/M, q),
// R = n + m theta, L = k - l theta. Accepts any integer Delta (the
// verification routines step outside the fundamental range). The q-window
// doubles until the last shell adds less than 1e-13 of the total;
// NonConvergent past qmax.
Complex product_map(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p, double z,
                    int delta, int qmax = kDefaultQmax);

// product_map restricted to 0 <= Delta < M (IndexOutOfRange otherwise).
Complex tensor_direct(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p, double z,
                      int delta, int qmax = kDefaultQmax);

// Coefficients of a quadratic polynomial in (z, Delta).
struct QuadraticZD {
  Complex zz, zd, dd, z, d, one;
  Complex operator()(double zv, double dv) const {
    return zz * zv * zv + zd * zv * dv + dd * dv * dv + z * zv + d * dv + one;
  }
};

// Affine form in (z, Delta).
struct AffineZD {
  Complex z, d, one;
  Complex operator()(double zv, double dv) const { return z * zv + d * dv + one; }
};

// Affine form in (z, Delta, q0).
struct AffineZDQ {
  Complex z, d, q0, one;
  Complex operator()(double zv, double dv, double qv) const { return z * zv + d * dv + q0 * qv + one; }
};

// Theta-factorized product of two Gaussians f = exp(-s1 x^2/2 - c1 x) delta^mu_alpha,
// g = exp(-s2 y^2/2 - c2 y) delta^nu_beta:
//   h(z, Delta) = Theta(s, t(z, Delta, q0)) * exp(xi(z, Delta, q0))
// with xi = base(z, Delta) + q0_linear(z, Delta) q0 + q0_square q0^2.
struct ProductClosedForm {
  int alpha = 0;
  int beta = 0;
  Complex s;
  QuadraticZD xi_base;
  AffineZD xi_q0_linear;
  Complex xi_q0_square;
  AffineZDQ t_affine;
  std::vector<std::optional<int>> q0_table;  // indexed by Delta in [0, M)
  ProductParams params;

  std::optional<int> q0(int delta) const;
  Complex xi(double z, int delta, int q0) const;
  Complex t(double z, int delta, int q0) const;
  // Zero when the index congruences have no solution at Delta.
  Complex evaluate(double z, int delta, double eps = 1e-16) const;
};

// Throws InvalidSigma unless Re(sigma1), Re(sigma2) > 0.
ProductClosedForm tensor_gaussian_closed(int alpha, int beta, Complex sigma1, Complex c1, Complex sigma2,
                                         Complex c2, const ProductParams& p);

// The theta basis of the product for a shared tau and factor offsets g1, g2:
//   phi_gamma(z, Delta) = exp(-sigma' z^2/2 - (g1 + g2) R z) delta^Delta_gamma,
//   sigma' = i tau M R / L.
std::vector<PolyGaussVector> product_basis(const ProductParams& p, Complex tau, Complex offset1,
                                           Complex offset2);
// Both factors carry the holomorphic offset of cs.
std::vector<PolyGaussVector> product_basis(const ProductParams& p, const ComplexStructure& cs);

struct StructureEntry {
  Complex value;
  std::optional<int> q0;
  Complex s, t, K;  // value = Theta(s, t) e^K when q0 is present
};

// c^gamma_{alpha beta}: expansion of phi'_alpha (x) phi''_beta in the product
// theta basis, stored alpha-major.
struct StructureConstants {
  int m = 1, l = 1, M = 1;
  std::vector<StructureEntry> entries;

  std::size_t index(int alpha, int beta, int gamma) const {
    return (static_cast<std::size_t>(alpha) * l + beta) * M + gamma;
  }
  const StructureEntry& at(int alpha, int beta, int gamma) const { return entries[index(alpha, beta, gamma)]; }
  Complex value(int alpha, int beta, int gamma) const { return at(alpha, beta, gamma).value; }
};

// Entries are evaluated in parallel; structure_constants_serial is the
// single-threaded reference and gives identical results.
StructureConstants structure_constants(const ProductParams& p, Complex tau, Complex offset1, Complex offset2);
StructureConstants structure_constants_serial(const ProductParams& p, Complex tau, Complex offset1,
                                              Complex offset2);
StructureConstants structure_constants(const ProductParams& p, const ComplexStructure& cs);

// Factor theta bases: holomorphic_basis of the right and the left module.
std::vector<PolyGaussVector> right_factor_basis(const ProductParams& p, Complex tau, Complex offset);
std::vector<PolyGaussVector> left_factor_basis(const ProductParams& p, Complex tau, Complex offset);

// sum_gamma c^gamma_{alpha beta} phi_gamma(z, Delta).
Complex reconstruct_product(const StructureConstants& sc, const std::vector<PolyGaussVector>& basis, int alpha,
                            int beta, double z, int delta);

// Probe grid for product residuals: z in {-1, -0.5, 0, 0.3, 0.7, 1}, all Delta.
struct ProbeGrid {
  std::vector<double> z;
  std::vector<int> delta;

  static ProbeGrid standard(const ProductParams& p);
  std::size_t size() const { return z.size() * delta.size(); }
};

// product_map on every grid point, z-major. Parallel and serial versions.
std::vector<Complex> product_map_grid(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p,
                                      const ProbeGrid& grid, int delta_offset = 0, int qmax = kDefaultQmax);
std::vector<Complex> product_map_grid_serial(const PolyGaussVector& f, const PolyGaussVector& g,
                                             const ProductParams& p, const ProbeGrid& grid, int delta_offset = 0,
                                             int qmax = kDefaultQmax);

enum class Generator { U1, U2 };

// The residuals below are max |lhs - rhs| / (1 + max |lhs|) over the probe
// grid; the identities are exact, so they measure rounding only.

// h((U f) (x) g) against h(f (x) (U g)).
double verify_identification(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p,
                             Generator generator);
// h(z, Delta + M) against h(z, Delta).
double verify_delta_period(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p);
// Z1: h((Z1 f) (x) g)(z, Delta) against h(z - N'/M + theta', Delta - 1).
// Z2: h((Z2 f) (x) g)(z, Delta) against exp[2 pi i (z - N' Delta/M)] h(z, Delta).
std::pair<double, double> verify_Z_covariance(const PolyGaussVector& f, const PolyGaussVector& g,
                                              const ProductParams& p);

}  // namespace nctorus

#endif  // NCTORUS_TENSOR_PRODUCT_HPP
