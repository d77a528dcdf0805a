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

#include "nctorus/tensor_product.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>

namespace nctorus {

namespace {

constexpr double kShellRelative = 1e-13;

void check_factor_dims(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p) {
  if (f.components() != p.m || g.components() != p.l) {
    throw Error(ErrorKind::DimensionMismatch, "product map needs f on Z_" + std::to_string(p.m) +
                                                  " and g on Z_" + std::to_string(p.l));
  }
}

Complex unit_phase(double turns) {
  const double angle = 2.0 * kPi * turns;
  return {std::cos(angle), std::sin(angle)};
}

// Runs body(i) for i in [0, count) on the OpenMP team. The first exception
// thrown by any iteration is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr failure;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(nctorus_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <typename Body>
void serial_for(std::size_t count, Body&& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

struct HolomorphicData {
  Complex sigma1, sigma2;
};

HolomorphicData holomorphic_factors(const ProductParams& p, Complex tau) {
  require_sign_assumptions(p);
  HolomorphicData data{kI * tau * static_cast<double>(p.m) / p.right_scale(),
                       kI * tau * static_cast<double>(p.l) / p.left_scale()};
  if (!(data.sigma1.real() > 0.0) || !(data.sigma2.real() > 0.0)) {
    throw Error(ErrorKind::NoHolomorphicVectors, "need Im(tau) < 0 for n + m*theta > 0 and k - l*theta > 0");
  }
  return data;
}

StructureEntry structure_entry(const ProductClosedForm& closed, int gamma) {
  StructureEntry entry;
  entry.s = closed.s;
  entry.q0 = closed.q0(gamma);
  if (!entry.q0) return entry;
  // With a common tau every z-coefficient of the factorization vanishes, so
  // the z = 0 value is the expansion coefficient (phi_gamma(0, gamma) = 1).
  entry.t = closed.t(0.0, gamma, *entry.q0);
  entry.K = closed.xi(0.0, gamma, *entry.q0);
  entry.value = theta_exp({entry.s, entry.t}, entry.K);
  return entry;
}

template <typename Loop>
StructureConstants structure_constants_with(const ProductParams& p, Complex tau, Complex offset1,
                                            Complex offset2, Loop&& loop) {
  const HolomorphicData h = holomorphic_factors(p, tau);
  std::vector<ProductClosedForm> closed;
  closed.reserve(static_cast<std::size_t>(p.m * p.l));
  for (int alpha = 0; alpha < p.m; ++alpha) {
    for (int beta = 0; beta < p.l; ++beta) {
      closed.push_back(tensor_gaussian_closed(alpha, beta, h.sigma1, offset1, h.sigma2, offset2, p));
    }
  }
  StructureConstants sc;
  sc.m = p.m;
  sc.l = p.l;
  sc.M = p.M();
  sc.entries.resize(static_cast<std::size_t>(sc.m * sc.l * sc.M));
  loop(sc.entries.size(), [&](std::size_t idx) {
    const std::size_t pair = idx / static_cast<std::size_t>(sc.M);
    const int gamma = static_cast<int>(idx % static_cast<std::size_t>(sc.M));
    sc.entries[idx] = structure_entry(closed[pair], gamma);
  });
  return sc;
}

template <typename Loop>
std::vector<Complex> grid_with(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p,
                               const ProbeGrid& grid, int delta_offset, int qmax, Loop&& loop) {
  check_factor_dims(f, g, p);
  std::vector<Complex> out(grid.size());
  const std::size_t nd = grid.delta.size();
  loop(out.size(), [&](std::size_t idx) {
    out[idx] = product_map(f, g, p, grid.z[idx / nd], grid.delta[idx % nd] + delta_offset, qmax);
  });
  return out;
}

double normalized_residual(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
    scale = std::max(scale, std::abs(lhs[i]));
  }
  return diff / (1.0 + scale);
}

}  // namespace

ProductParams ProductParams::make(int n, int m, int k, int l, double theta, std::optional<BezoutPair> nm_pair,
                                  std::optional<BezoutPair> kl_pair) {
  if (m < 1 || l < 1) throw Error(ErrorKind::IndexOutOfRange, "m and l must be positive");
  ProductParams p;
  p.n = n;
  p.m = m;
  p.k = k;
  p.l = l;
  p.theta = theta;
  p.bezout_nm = nm_pair ? bezout_from(nm_pair->a, nm_pair->b, n, m) : bezout(n, m);
  p.bezout_kl = kl_pair ? bezout_from(kl_pair->a, kl_pair->b, k, l) : bezout(k, l);
  p.profile = bimodule_profile_unchecked(n, m, k, l, theta, p.bezout_nm, p.bezout_kl);
  if (p.profile.M < 1) throw Error(ErrorKind::IndexOutOfRange, "nl + mk must be positive");
  p.r = std::gcd(m, l);
  return p;
}

void require_sign_assumptions(const ProductParams& p) {
  if (!(p.right_scale() > 0.0)) throw Error(ErrorKind::SignAssumptionViolated, "requires n + m*theta > 0");
  if (!(p.left_scale() > 0.0)) throw Error(ErrorKind::SignAssumptionViolated, "requires k - l*theta > 0");
}

std::optional<int> crt_q0(int alpha, int beta, int delta, const ProductParams& p) {
  const long long m = p.m, l = p.l, r = p.r;
  const long long first = static_cast<long long>(p.bezout_nm.a) * delta - alpha;
  if (((first - beta) % r + r) % r != 0) return std::nullopt;
  // q = first + m j with m j = beta - first (mod l); divide through by r.
  const long long l_r = l / r;
  const long long m_r = m / r;
  const long long rhs = ((beta - first) / r % l_r + l_r) % l_r;
  long long inverse = 0;
  if (l_r > 1) {
    long long old_r = m_r % l_r, rr = l_r, old_s = 1, s = 0;
    while (rr != 0) {
      const long long q = old_r / rr;
      old_r -= q * rr;
      std::swap(old_r, rr);
      old_s -= q * s;
      std::swap(old_s, s);
    }
    inverse = (old_s % l_r + l_r) % l_r;
  }
  const long long j = l_r > 1 ? rhs * inverse % l_r : 0;
  const long long period = m_r * l;
  const long long q0 = ((first + m * j) % period + period) % period;
  return static_cast<int>(q0);
}

Complex product_map(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p, double z,
                    int delta, int qmax) {
  check_factor_dims(f, g, p);
  if (f.is_zero() || g.is_zero()) return {};
  const double R = p.right_scale();
  const double L = p.left_scale();
  const double M = p.M();
  const long long a = p.bezout_nm.a;
  const double xf0 = R * z + p.l * R * delta / (p.m * M);
  const double yg0 = R * z - L * delta / M;

  auto summand = [&](long long q) {
    const double dq = static_cast<double>(q);
    const Complex fv = evaluate(f, xf0 - R * dq / p.m, wrap_index(a * delta - q, p.m));
    if (fv == Complex{}) return fv;
    return fv * evaluate(g, yg0 + L * dq / p.l, wrap_index(q, p.l));
  };

  // Window centred where the f argument vanishes.
  const long long centre = std::llround(xf0 * p.m / R);
  long long radius = std::max<long long>(8, 2LL * p.period());
  CompensatedSum total;
  for (long long q = centre - radius; q <= centre + radius; ++q) total.add(summand(q));
  while (true) {
    if (radius > qmax) {
      throw Error(ErrorKind::NonConvergent, "product map q-sum exceeded qmax = " + std::to_string(qmax));
    }
    CompensatedSum shell;
    for (long long q = radius + 1; q <= 2 * radius; ++q) {
      shell.add(summand(centre + q));
      shell.add(summand(centre - q));
    }
    total.add(shell.value());
    const double shell_size = std::abs(shell.value());
    if (shell_size <= kShellRelative * std::abs(total.value())) return total.value();
    radius *= 2;
  }
}

Complex tensor_direct(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p, double z,
                      int delta, int qmax) {
  if (delta < 0 || delta >= p.M()) {
    throw Error(ErrorKind::IndexOutOfRange, "Delta must lie in [0, " + std::to_string(p.M()) + ")");
  }
  return product_map(f, g, p, z, delta, qmax);
}

std::optional<int> ProductClosedForm::q0(int delta) const {
  if (delta >= 0 && delta < static_cast<int>(q0_table.size())) return q0_table[static_cast<std::size_t>(delta)];
  return crt_q0(alpha, beta, delta, params);
}

Complex ProductClosedForm::xi(double z, int delta, int q) const {
  const double dq = q;
  return xi_base(z, delta) + xi_q0_linear(z, delta) * dq + xi_q0_square * dq * dq;
}

Complex ProductClosedForm::t(double z, int delta, int q) const { return t_affine(z, delta, q); }

Complex ProductClosedForm::evaluate(double z, int delta, double eps) const {
  const auto q = q0(delta);
  if (!q) return {};
  return theta_exp({s, t(z, delta, *q)}, xi(z, delta, *q), eps);
}

ProductClosedForm tensor_gaussian_closed(int alpha, int beta, Complex sigma1, Complex c1, Complex sigma2,
                                         Complex c2, const ProductParams& p) {
  if (alpha < 0 || alpha >= p.m || beta < 0 || beta >= p.l) {
    throw Error(ErrorKind::IndexOutOfRange, "alpha or beta outside Z_m x Z_l");
  }
  if (!(sigma1.real() > 0.0) || !(sigma2.real() > 0.0)) {
    throw Error(ErrorKind::InvalidSigma, "Re(sigma1) and Re(sigma2) must be positive");
  }
  const double R = p.right_scale();
  const double L = p.left_scale();
  const double M = p.M();
  const double period = p.period();

  // f argument A - eps q, g argument B + eta q, with A, B affine in (z, Delta).
  const double az = R, ad = p.l * R / (p.m * M);
  const double bz = R, bd = -L / M;
  const double eps = R / p.m, eta = L / p.l;
  const Complex P = sigma1 * eps * eps + sigma2 * eta * eta;

  ProductClosedForm form;
  form.alpha = alpha;
  form.beta = beta;
  form.params = p;
  form.xi_base = {-0.5 * sigma1 * az * az - 0.5 * sigma2 * bz * bz,
                  -sigma1 * az * ad - sigma2 * bz * bd,
                  -0.5 * sigma1 * ad * ad - 0.5 * sigma2 * bd * bd,
                  -c1 * az - c2 * bz,
                  -c1 * ad - c2 * bd,
                  0.0};
  form.xi_q0_linear = {sigma1 * eps * az - sigma2 * eta * bz, sigma1 * eps * ad - sigma2 * eta * bd,
                       c1 * eps - c2 * eta};
  form.xi_q0_square = -0.5 * P;
  // q = q0 + u ml/r turns the q-sum into Theta(s, t) with
  // pi i s = -P (ml/r)^2 / 2 and 2 pi i t = (ml/r)(Lin - P q0).
  form.s = kI * P * period * period / (2.0 * kPi);
  const Complex to_t = period / (2.0 * kPi * kI);
  form.t_affine = {to_t * form.xi_q0_linear.z, to_t * form.xi_q0_linear.d, -to_t * P,
                   to_t * form.xi_q0_linear.one};
  form.q0_table.resize(static_cast<std::size_t>(p.M()));
  for (int delta = 0; delta < p.M(); ++delta) {
    form.q0_table[static_cast<std::size_t>(delta)] = crt_q0(alpha, beta, delta, p);
  }
  return form;
}

std::vector<PolyGaussVector> product_basis(const ProductParams& p, Complex tau, Complex offset1,
                                           Complex offset2) {
  holomorphic_factors(p, tau);
  const double R = p.right_scale();
  const Complex sigma = kI * tau * static_cast<double>(p.M()) * R / p.left_scale();
  const Complex c = (offset1 + offset2) * R;
  std::vector<PolyGaussVector> basis;
  basis.reserve(static_cast<std::size_t>(p.M()));
  for (int gamma = 0; gamma < p.M(); ++gamma) basis.push_back(PolyGaussVector::gaussian(p.M(), gamma, sigma, c));
  return basis;
}

std::vector<PolyGaussVector> product_basis(const ProductParams& p, const ComplexStructure& cs) {
  validate(cs);
  const Complex offset = holomorphic_offset(cs);
  return product_basis(p, cs.tau, offset, offset);
}

std::vector<PolyGaussVector> right_factor_basis(const ProductParams& p, Complex tau, Complex offset) {
  const HolomorphicData h = holomorphic_factors(p, tau);
  std::vector<PolyGaussVector> basis;
  for (int alpha = 0; alpha < p.m; ++alpha) basis.push_back(PolyGaussVector::gaussian(p.m, alpha, h.sigma1, offset));
  return basis;
}

std::vector<PolyGaussVector> left_factor_basis(const ProductParams& p, Complex tau, Complex offset) {
  const HolomorphicData h = holomorphic_factors(p, tau);
  std::vector<PolyGaussVector> basis;
  for (int beta = 0; beta < p.l; ++beta) basis.push_back(PolyGaussVector::gaussian(p.l, beta, h.sigma2, offset));
  return basis;
}

StructureConstants structure_constants(const ProductParams& p, Complex tau, Complex offset1, Complex offset2) {
  return structure_constants_with(p, tau, offset1, offset2,
                                  [](std::size_t n, auto&& body) { parallel_for(n, body); });
}

StructureConstants structure_constants_serial(const ProductParams& p, Complex tau, Complex offset1,
                                              Complex offset2) {
  return structure_constants_with(p, tau, offset1, offset2,
                                  [](std::size_t n, auto&& body) { serial_for(n, body); });
}

StructureConstants structure_constants(const ProductParams& p, const ComplexStructure& cs) {
  validate(cs);
  const Complex offset = holomorphic_offset(cs);
  return structure_constants(p, cs.tau, offset, offset);
}

Complex reconstruct_product(const StructureConstants& sc, const std::vector<PolyGaussVector>& basis, int alpha,
                            int beta, double z, int delta) {
  if (static_cast<int>(basis.size()) != sc.M) throw Error(ErrorKind::DimensionMismatch, "basis size != M");
  const int slot = wrap_index(delta, sc.M);
  Complex total{};
  for (int gamma = 0; gamma < sc.M; ++gamma) {
    total += sc.value(alpha, beta, gamma) * evaluate(basis[static_cast<std::size_t>(gamma)], z, slot);
  }
  return total;
}

ProbeGrid ProbeGrid::standard(const ProductParams& p) {
  ProbeGrid grid;
  grid.z = {-1.0, -0.5, 0.0, 0.3, 0.7, 1.0};
  grid.delta.resize(static_cast<std::size_t>(p.M()));
  std::iota(grid.delta.begin(), grid.delta.end(), 0);
  return grid;
}

std::vector<Complex> product_map_grid(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p,
                                      const ProbeGrid& grid, int delta_offset, int qmax) {
  return grid_with(f, g, p, grid, delta_offset, qmax, [](std::size_t n, auto&& body) { parallel_for(n, body); });
}

std::vector<Complex> product_map_grid_serial(const PolyGaussVector& f, const PolyGaussVector& g,
                                             const ProductParams& p, const ProbeGrid& grid, int delta_offset,
                                             int qmax) {
  return grid_with(f, g, p, grid, delta_offset, qmax, [](std::size_t n, auto&& body) { serial_for(n, body); });
}

double verify_identification(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p,
                             Generator generator) {
  const ProbeGrid grid = ProbeGrid::standard(p);
  const ModuleTag right = p.right_tag();
  const ModuleTag left = p.left_tag();
  const bool u1 = generator == Generator::U1;
  const PolyGaussVector uf = u1 ? act_U1(f, right) : act_U2(f, right);
  const PolyGaussVector ug = u1 ? act_U1(g, left) : act_U2(g, left);
  return normalized_residual(product_map_grid(uf, g, p, grid), product_map_grid(f, ug, p, grid));
}

double verify_delta_period(const PolyGaussVector& f, const PolyGaussVector& g, const ProductParams& p) {
  const ProbeGrid grid = ProbeGrid::standard(p);
  return normalized_residual(product_map_grid(f, g, p, grid, p.M()), product_map_grid(f, g, p, grid));
}

std::pair<double, double> verify_Z_covariance(const PolyGaussVector& f, const PolyGaussVector& g,
                                              const ProductParams& p) {
  const ProbeGrid grid = ProbeGrid::standard(p);
  const ModuleTag right = p.right_tag();
  const double M = p.M();
  const double n_prime = p.profile.N_prime;

  const auto z1_lhs = product_map_grid(act_Z1(f, right), g, p, grid);
  ProbeGrid moved = grid;
  for (double& z : moved.z) z += -n_prime / M + p.profile.theta_prime;
  const auto z1_rhs = product_map_grid(f, g, p, moved, -1);

  const auto z2_lhs = product_map_grid(act_Z2(f, right), g, p, grid);
  auto z2_rhs = product_map_grid(f, g, p, grid);
  const std::size_t nd = grid.delta.size();
  for (std::size_t idx = 0; idx < z2_rhs.size(); ++idx) {
    const double z = grid.z[idx / nd];
    const double delta = grid.delta[idx % nd];
    z2_rhs[idx] *= unit_phase(z - n_prime * delta / M);
  }
  return {normalized_residual(z1_lhs, z1_rhs), normalized_residual(z2_lhs, z2_rhs)};
}

}  // namespace nctorus
