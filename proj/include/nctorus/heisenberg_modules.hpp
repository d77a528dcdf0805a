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

#ifndef NCTORUS_HEISENBERG_MODULES_HPP
#define NCTORUS_HEISENBERG_MODULES_HPP

#include <optional>

#include "nctorus/gaussian_space.hpp"
#include "nctorus/nc_algebra.hpp"

namespace nctorus {

enum class Side { right, left };

// Discrete data of a basic module realized on S(R x Z_m).
//
// Right side: E_{n,m}(theta). Left side: E'_{k,l}(theta), realized by the
// right-side formulas with theta -> -theta. scale() is n + m*theta for the
// right side and k - l*theta for the left side; every action is written in
// terms of it.
//
// scale() == 0 is representable (the generator actions stay well defined);
// operations dividing by it throw DegenerateDenominator.
struct ModuleTag {
  int n = 1;
  int m = 1;
  double theta = 0.0;
  Side side = Side::right;
  BezoutPair bezout;

  static ModuleTag right(int n, int m, double theta, std::optional<BezoutPair> pair = {});
  static ModuleTag left(int k, int l, double theta, std::optional<BezoutPair> pair = {});

  double effective_theta() const { return side == Side::right ? theta : -theta; }
  double scale() const { return n + m * effective_theta(); }
};

struct BimoduleProfile {
  double theta_prime = 0.0;
  double theta_double_prime = 0.0;
  int M = 0;
  int N_prime = 0;
  int N_double_prime = 0;
};

// Generator actions. For the right module the algebra acts on the right:
// v.(U1 U2) = act_U2(act_U1(v)). The left module uses ordinary composition.
PolyGaussVector act_U1(const PolyGaussVector& v, const ModuleTag& tag);
PolyGaussVector act_U2(const PolyGaussVector& v, const ModuleTag& tag);

// power may be negative (inverse generators).
PolyGaussVector act_U1_power(const PolyGaussVector& v, const ModuleTag& tag, int power);
PolyGaussVector act_U2_power(const PolyGaussVector& v, const ModuleTag& tag, int power);

// Endomorphisms of the right module E_{n,m}, generating T_{theta'}.
PolyGaussVector act_Z1(const PolyGaussVector& v, const ModuleTag& tag);
PolyGaussVector act_Z2(const PolyGaussVector& v, const ModuleTag& tag);

// Action of a whole algebra element, Weyl ordered:
//   U_(n1,n2) = e^{-pi i n1 n2 theta} U1^{n1} U2^{n2}.
// Right side: returns v.f, so act_element(g, act_element(f, v)) == act_element(f g, v).
// Left side: returns f.v, so act_element(f, act_element(g, v)) == act_element(f g, v).
PolyGaussVector act_element(const TorusElement& f, const PolyGaussVector& v, const ModuleTag& tag);

// theta', theta'', M = nl + mk, N' = ak + bl, N'' = -(cn + md).
// Requires n + m theta > 0 and k - l theta > 0 (SignAssumptionViolated).
BimoduleProfile bimodule_profile(int n, int m, int k, int l, double theta,
                                 std::optional<BezoutPair> nm_pair = {},
                                 std::optional<BezoutPair> kl_pair = {});

// Same bookkeeping without the sign assumptions; theta'' is NaN when
// k - l theta == 0.
BimoduleProfile bimodule_profile_unchecked(int n, int m, int k, int l, double theta,
                                           const BezoutPair& nm_pair, const BezoutPair& kl_pair);

}  // namespace nctorus

#endif  // NCTORUS_HEISENBERG_MODULES_HPP
