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

#include "nctorus/heisenberg_modules.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nctorus {

namespace {

void check_dims(const PolyGaussVector& v, const ModuleTag& tag) {
  if (v.components() != tag.m) {
    throw Error(ErrorKind::DimensionMismatch, "vector has " + std::to_string(v.components()) +
                                                  " components, module needs " + std::to_string(tag.m));
  }
}

ModuleTag make_tag(int n, int m, double theta, Side side, std::optional<BezoutPair> pair) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "m must be positive");
  ModuleTag tag;
  tag.n = n;
  tag.m = m;
  tag.theta = theta;
  tag.side = side;
  if (pair) {
    tag.bezout = bezout_from(pair->a, pair->b, n, m);
  } else {
    tag.bezout = bezout(n, m);
  }
  return tag;
}

Complex unit_phase(double turns) {
  const double angle = 2.0 * kPi * turns;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ModuleTag ModuleTag::right(int n, int m, double theta, std::optional<BezoutPair> pair) {
  return make_tag(n, m, theta, Side::right, pair);
}

ModuleTag ModuleTag::left(int k, int l, double theta, std::optional<BezoutPair> pair) {
  return make_tag(k, l, theta, Side::left, pair);
}

// U1 v(x, mu) = v(x - scale/m, mu - 1)
PolyGaussVector act_U1(const PolyGaussVector& v, const ModuleTag& tag) {
  return act_U1_power(v, tag, 1);
}

// U2 v(x, mu) = e^{2 pi i (x - mu n/m)} v(x, mu)
PolyGaussVector act_U2(const PolyGaussVector& v, const ModuleTag& tag) {
  return act_U2_power(v, tag, 1);
}

PolyGaussVector act_U1_power(const PolyGaussVector& v, const ModuleTag& tag, int power) {
  check_dims(v, tag);
  if (power == 0) return v;
  const double step = tag.scale() / tag.m;
  return rotate_components(shift(v, power * step), power);
}

PolyGaussVector act_U2_power(const PolyGaussVector& v, const ModuleTag& tag, int power) {
  check_dims(v, tag);
  if (power == 0) return v;
  const PolyGaussVector w = mul_exp(v, 2.0 * kPi * kI * static_cast<double>(power));
  const long long n = tag.n;
  const int m = tag.m;
  return component_phase(w, [=](int mu) {
    // mu*n*power only matters modulo m.
    const int r = wrap_index(static_cast<long long>(mu) * n * power, m);
    return unit_phase(-static_cast<double>(r) / m);
  });
}

// Z1 v(x, mu) = v(x - 1/m, mu - a)
PolyGaussVector act_Z1(const PolyGaussVector& v, const ModuleTag& tag) {
  check_dims(v, tag);
  if (tag.side != Side::right) throw Error(ErrorKind::WrongSide, "Z1 acts on right modules only");
  return rotate_components(shift(v, 1.0 / tag.m), tag.bezout.a);
}

// Z2 v(x, mu) = exp[2 pi i (x/scale - mu/m)] v(x, mu)
PolyGaussVector act_Z2(const PolyGaussVector& v, const ModuleTag& tag) {
  check_dims(v, tag);
  if (tag.side != Side::right) throw Error(ErrorKind::WrongSide, "Z2 acts on right modules only");
  if (tag.scale() == 0.0) throw Error(ErrorKind::DegenerateDenominator, "n + m*theta == 0");
  const PolyGaussVector w = mul_exp(v, 2.0 * kPi * kI / tag.scale());
  const int m = tag.m;
  return component_phase(w, [=](int mu) { return unit_phase(-static_cast<double>(mu) / m); });
}

PolyGaussVector act_element(const TorusElement& f, const PolyGaussVector& v, const ModuleTag& tag) {
  check_dims(v, tag);
  PolyGaussVector out(v.components());
  for (const auto& [mode, amplitude] : f.coeffs()) {
    const Complex weyl = amplitude * unit_phase(-0.5 * static_cast<double>(mode.n1) * mode.n2 * tag.theta);
    PolyGaussVector w = tag.side == Side::right
                            ? act_U2_power(act_U1_power(v, tag, mode.n1), tag, mode.n2)
                            : act_U1_power(act_U2_power(v, tag, mode.n2), tag, mode.n1);
    out = axpy(weyl, w, out);
  }
  return out;
}

BimoduleProfile bimodule_profile_unchecked(int n, int m, int k, int l, double theta,
                                           const BezoutPair& nm_pair, const BezoutPair& kl_pair) {
  BimoduleProfile profile;
  profile.M = n * l + m * k;
  profile.N_prime = nm_pair.a * k + nm_pair.b * l;
  profile.N_double_prime = -(kl_pair.a * n + m * kl_pair.b);
  profile.theta_prime = theta_prime(theta, nm_pair);
  profile.theta_double_prime = (k - l * theta) == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                                       : theta_double_prime(theta, kl_pair);
  return profile;
}

BimoduleProfile bimodule_profile(int n, int m, int k, int l, double theta,
                                 std::optional<BezoutPair> nm_pair, std::optional<BezoutPair> kl_pair) {
  const BezoutPair ab = nm_pair ? bezout_from(nm_pair->a, nm_pair->b, n, m) : bezout(n, m);
  const BezoutPair cd = kl_pair ? bezout_from(kl_pair->a, kl_pair->b, k, l) : bezout(k, l);
  if (!(n + m * theta > 0.0)) {
    throw Error(ErrorKind::SignAssumptionViolated, "requires n + m*theta > 0");
  }
  if (!(k - l * theta > 0.0)) {
    throw Error(ErrorKind::SignAssumptionViolated, "requires k - l*theta > 0");
  }
  return bimodule_profile_unchecked(n, m, k, l, theta, ab, cd);
}

}  // namespace nctorus
