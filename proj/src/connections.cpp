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

#include "nctorus/connections.hpp"

#include <cmath>

namespace nctorus {

namespace {

double nonzero_scale(const ModuleTag& tag) {
  const double s = tag.scale();
  if (s == 0.0) throw Error(ErrorKind::DegenerateDenominator, "module scale n + m*theta is zero");
  return s;
}

// integral x^k exp(-a x^2 - b x) dx for k = 0..max_k, Re(a) > 0.
// Integration by parts: k I_{k-1} - 2a I_{k+1} - b I_k = 0.
std::vector<Complex> gaussian_moments(Complex a, Complex b, std::size_t max_k) {
  std::vector<Complex> moments(max_k + 1);
  moments[0] = std::sqrt(kPi / a) * std::exp(b * b / (4.0 * a));
  if (max_k >= 1) moments[1] = -b / (2.0 * a) * moments[0];
  for (std::size_t k = 1; k + 1 <= max_k; ++k) {
    moments[k + 1] = (static_cast<double>(k) * moments[k - 1] - b * moments[k]) / (2.0 * a);
  }
  return moments;
}

}  // namespace

void validate(const ComplexStructure& cs) {
  if (cs.tau.imag() == 0.0) throw Error(ErrorKind::InvalidSigma, "tau must not be real");
  if (cs.lambda2 == Complex{}) throw Error(ErrorKind::InvalidSigma, "lambda2 must be nonzero");
}

PolyGaussVector nabla1(const PolyGaussVector& v, const ModuleTag& tag, Complex c1) {
  if (v.components() != tag.m) throw Error(ErrorKind::DimensionMismatch, "nabla1: component count");
  const Complex k = 2.0 * kPi * kI * static_cast<double>(tag.m) / nonzero_scale(tag);
  return axpy(c1, v, scale(mul_x(v), k));
}

PolyGaussVector nabla2(const PolyGaussVector& v, const ModuleTag& tag, Complex c2) {
  if (v.components() != tag.m) throw Error(ErrorKind::DimensionMismatch, "nabla2: component count");
  return axpy(c2, v, scale(differentiate(v), 2.0 * kPi));
}

PolyGaussVector dbar(const PolyGaussVector& v, const ModuleTag& tag, const ComplexStructure& cs) {
  validate(cs);
  return axpy(cs.lambda1(), nabla1(v, tag, cs.c1), scale(nabla2(v, tag, cs.c2), cs.lambda2));
}

Complex curvature_constant(int m, double scale) {
  if (scale == 0.0) throw Error(ErrorKind::DegenerateDenominator, "module scale is zero");
  return -4.0 * kPi * kPi * kI * static_cast<double>(m) / scale;
}

Complex curvature_constant(const ModuleTag& tag) { return curvature_constant(tag.m, tag.scale()); }

double leibniz_defect(const PolyGaussVector& v, const TorusElement& f, const ModuleTag& tag, int axis,
                      DerivationScaling scaling) {
  if (axis != 1 && axis != 2) throw Error(ErrorKind::IndexOutOfRange, "axis must be 1 or 2");
  auto nabla = [&](const PolyGaussVector& w) { return axis == 1 ? nabla1(w, tag) : nabla2(w, tag); };
  TorusElement df = derivation(f, axis);
  if (axis == 2 && scaling == DerivationScaling::rescaled) df = Complex{2.0 * kPi} * df;

  const PolyGaussVector lhs = nabla(act_element(f, v, tag));
  const PolyGaussVector rhs = act_element(f, nabla(v), tag) + act_element(df, v, tag);
  return max_abs_difference(lhs, rhs);
}

Complex holomorphic_sigma(const ModuleTag& tag, const ComplexStructure& cs) {
  return kI * cs.tau * static_cast<double>(tag.m) / nonzero_scale(tag);
}

Complex holomorphic_offset(const ComplexStructure& cs) {
  return (cs.lambda1() * cs.c1 + cs.lambda2 * cs.c2) / (2.0 * kPi * cs.lambda2);
}

std::vector<PolyGaussVector> holomorphic_basis(const ModuleTag& tag, const ComplexStructure& cs) {
  validate(cs);
  const Complex sigma = holomorphic_sigma(tag, cs);
  if (!(sigma.real() > 0.0)) {
    throw Error(ErrorKind::NoHolomorphicVectors,
                "Re(sigma) <= 0: need Im(tau) < 0 when the module scale is positive, Im(tau) > 0 when negative");
  }
  const Complex c = holomorphic_offset(cs);
  std::vector<PolyGaussVector> basis;
  basis.reserve(static_cast<std::size_t>(tag.m));
  for (int alpha = 0; alpha < tag.m; ++alpha) {
    basis.push_back(PolyGaussVector::gaussian(tag.m, alpha, sigma, c));
  }
  return basis;
}

double dbar_residual(const PolyGaussVector& v, const ModuleTag& tag, const ComplexStructure& cs) {
  return max_abs(dbar(v, tag, cs));
}

Complex l2_pairing(const PolyGaussVector& u, const PolyGaussVector& v) {
  if (u.components() != v.components()) throw Error(ErrorKind::DimensionMismatch, "l2_pairing");
  Complex total{};
  for (const auto& tu : u.terms()) {
    for (const auto& tv : v.terms()) {
      if (tu.mu != tv.mu) continue;
      const Complex a = 0.5 * (std::conj(tu.sigma) + tv.sigma);
      const Complex b = std::conj(tu.c) + tv.c;
      const std::size_t deg = tu.poly.size() + tv.poly.size();
      const auto moments = gaussian_moments(a, b, deg);
      for (std::size_t i = 0; i < tu.poly.size(); ++i) {
        for (std::size_t j = 0; j < tv.poly.size(); ++j) {
          total += std::conj(tu.poly[i]) * tv.poly[j] * moments[i + j];
        }
      }
    }
  }
  return total;
}

}  // namespace nctorus
