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

#ifndef NCTORUS_CONNECTIONS_HPP
#define NCTORUS_CONNECTIONS_HPP

#include <vector>

#include "nctorus/heisenberg_modules.hpp"

namespace nctorus {

// dbar-connection lambda1 nabla1 + lambda2 nabla2 with tau = lambda1/lambda2,
// over the constant curvature connection nabla_a = nabla0_a + c_a.
struct ComplexStructure {
  Complex tau{0.0, -1.0};
  Complex c1{};
  Complex c2{};
  Complex lambda2{1.0};

  Complex lambda1() const { return tau * lambda2; }
};

// Throws InvalidSigma if Im(tau) == 0 or lambda2 == 0.
void validate(const ComplexStructure& cs);

// nabla1 = 2 pi i m/scale x + c1,  nabla2 = 2 pi d/dx + c2.
PolyGaussVector nabla1(const PolyGaussVector& v, const ModuleTag& tag, Complex c1 = 0.0);
PolyGaussVector nabla2(const PolyGaussVector& v, const ModuleTag& tag, Complex c2 = 0.0);
PolyGaussVector dbar(const PolyGaussVector& v, const ModuleTag& tag, const ComplexStructure& cs);

// [nabla1, nabla2] = -4 pi^2 i m / scale, independent of c1, c2.
Complex curvature_constant(const ModuleTag& tag);
Complex curvature_constant(int m, double scale);

// Which derivations enter the Leibniz rule. The connection above satisfies
// it for delta'_1 = delta_1, delta'_2 = 2 pi delta_2 (rescaled); plain uses
// delta_1, delta_2 and leaves a defect whenever f has U2 content.
enum class DerivationScaling { rescaled, plain };

// Max over the probe grid of |nabla_a(v.f) - (nabla_a v).f - v.(delta'_a f)|.
double leibniz_defect(const PolyGaussVector& v, const TorusElement& f, const ModuleTag& tag, int axis,
                      DerivationScaling scaling = DerivationScaling::rescaled);

// sigma = i tau m / scale of the holomorphic Gaussians.
Complex holomorphic_sigma(const ModuleTag& tag, const ComplexStructure& cs);
// c = (lambda1 c1 + lambda2 c2) / (2 pi lambda2) of the holomorphic Gaussians.
Complex holomorphic_offset(const ComplexStructure& cs);

// The m theta vectors exp(-sigma x^2/2 - c x) delta^mu_alpha, alpha = 0..m-1.
// Throws NoHolomorphicVectors unless Re(sigma) > 0.
std::vector<PolyGaussVector> holomorphic_basis(const ModuleTag& tag, const ComplexStructure& cs);

// Max over the probe grid of |dbar v|.
double dbar_residual(const PolyGaussVector& v, const ModuleTag& tag, const ComplexStructure& cs);

// sum_mu integral conj(u(x, mu)) v(x, mu) dx, in closed form.
Complex l2_pairing(const PolyGaussVector& u, const PolyGaussVector& v);

}  // namespace nctorus

#endif  // NCTORUS_CONNECTIONS_HPP
