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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <charconv>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "nctorus/random.hpp"
#include "nctorus/serialization.hpp"
#include "nctorus/suites.hpp"
#include "oracles.hpp"

using namespace nctorus;

namespace {

struct Outcome {
  bool passed = true;
  double residual = 0.0;
  double tol = 0.0;
  std::string detail;

  void record(double r) { residual = std::max(residual, r); }
  void require(bool ok, const std::string& why) {
    if (!ok) {
      passed = false;
      if (detail.empty()) detail = why;
    }
  }
  bool ok() const { return passed && residual <= tol; }
};

std::string num(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string complex_arg(Complex z) { return num(z.real()) + "," + num(z.imag()); }

// Relative pointwise distance of two vectors on the probe grid, by direct evaluation.
double pointwise(const PolyGaussVector& a, const PolyGaussVector& b) {
  double diff = 0.0, size = 0.0;
  for (double x : probe_points()) {
    for (int mu = 0; mu < a.components(); ++mu) {
      const Complex va = evaluate(a, x, mu), vb = evaluate(b, x, mu);
      diff = std::max(diff, std::abs(va - vb));
      size = std::max(size, std::abs(va));
    }
  }
  return diff / (1.0 + size);
}

double rel(const TorusElement& a, const TorusElement& b) {
  double size = 0.0;
  for (const auto& [mode, c] : a.coeffs()) size = std::max(size, std::abs(c));
  return max_abs_difference(a, b) / (1.0 + size);
}

std::pair<int, int> coprime_pair(RandomSource& rng, int lo, int hi) {
  while (true) {
    const int n = rng.integer(lo, hi), m = rng.integer(1, 5);
    if (std::gcd(n, m) == 1) return {n, m};
  }
}

struct Set {
  int n, m, k, l;
};
const Set kIdentitySets[] = {{1, 1, 1, 1}, {1, 2, 1, 3}, {1, 1, 1, 2}, {3, 2, 2, 3}};
const double kIdentityThetas[] = {0.2, 1.4142135623730951 - 1.0, 0.5};

struct HoloSet {
  Set s;
  double theta;
  ComplexStructure cs;
};

std::vector<HoloSet> holomorphic_sets() {
  auto cs = [](Complex tau, Complex c1, Complex c2) {
    ComplexStructure out;
    out.tau = tau;
    out.c1 = c1;
    out.c2 = c2;
    return out;
  };
  return {
      {{1, 1, 1, 1}, 0.2, cs({0.0, -1.0}, 0.0, 0.0)},
      {{1, 2, 1, 3}, 0.2, cs({0.3, -0.8}, {0.2, 0.1}, {-0.1, 0.3})},
      {{1, 1, 1, 2}, 1.4142135623730951 - 1.0, cs({-0.2, -1.1}, {0.0, 0.2}, 0.1)},
      {{3, 2, 2, 3}, 0.2, cs({0.1, -0.6}, 0.05, {0.0, -0.1})},
      {{1, 2, 1, 2}, 0.3, cs({0.0, -1.5}, {0.1, 0.0}, {0.0, 0.1})},
  };
}

struct OracleSet {
  Set s;
  double theta;
  int alpha, beta;
  Complex sigma1, c1, sigma2, c2;
};

std::vector<OracleSet> oracle_sets() {
  RandomSource rng(2024);
  const Set pool[] = {{1, 1, 1, 1}, {1, 2, 1, 3}, {1, 1, 1, 2}, {3, 2, 2, 3}, {1, 2, 1, 2}, {2, 3, 1, 2}};
  std::vector<OracleSet> out;
  for (int i = 0; i < 10; ++i) {
    OracleSet o;
    o.s = pool[rng.integer(0, 5)];
    o.theta = rng.uniform(0.0, 0.3);
    o.alpha = rng.integer(0, o.s.m - 1);
    o.beta = rng.integer(0, o.s.l - 1);
    o.sigma1 = {rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5)};
    o.sigma2 = {rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5)};
    o.c1 = rng.complex(0.5);
    o.c2 = rng.complex(0.5);
    out.push_back(o);
  }
  return out;
}

Outcome criterion1() {
  Outcome out{.tol = 1e-12};
  RandomSource rng(101);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(-1.0, 1.0);
    const auto f = rng.torus_element(2), g = rng.torus_element(2), h = rng.torus_element(2);
    out.record(rel(mul(mul(f, g, theta), h, theta), mul(f, mul(g, h, theta), theta)));
    out.record(rel(involution(mul(f, g, theta)), mul(involution(g), involution(f), theta)));
    out.record(std::abs(trace(mul(f, g, theta)) - trace(mul(g, f, theta))));
    for (int axis = 1; axis <= 2; ++axis) {
      // Derivations carry a factor 2 pi |n|; compare relative to the result size.
      out.record(rel(derivation(mul(f, g, theta), axis),
                     mul(derivation(f, axis), g, theta) + mul(f, derivation(g, axis), theta)));
    }
    // Oracle: the clock and shift representation at a nearby rational theta.
    const int q = rng.integer(2, 7), p = rng.integer(1, q - 1);
    const oracle::ClockShift rep(p, q);
    const auto lhs = rep.represent(mul(f, g, rep.theta()));
    double size = 0.0;
    for (const Complex& e : lhs) size = std::max(size, std::abs(e));
    const double d = oracle::ClockShift::distance(lhs, rep.mul(rep.represent(f), rep.represent(g)));
    out.record(d / (1.0 + size));
  }
  out.detail = "associativity, anti-homomorphism, trace cyclicity, Leibniz; 200 instances each";
  return out;
}

Outcome criterion2() {
  Outcome out{.tol = 1e-12};
  RandomSource rng(202);
  for (int i = 0; i < 20; ++i) {
    const auto [n, m] = coprime_pair(rng, 1, 6);
    const double theta = rng.uniform(0.0, 1.0);
    const auto tag = ModuleTag::right(n, m, theta);
    const double tp = theta_prime(theta, tag.bezout);
    const auto v = rng.poly_gauss(m, 3, 2);
    out.record(pointwise(act_U2(act_U1(v, tag), tag), oracle::cis(theta) * act_U1(act_U2(v, tag), tag)));
    out.record(pointwise(act_Z2(act_Z1(v, tag), tag), oracle::cis(-tp) * act_Z1(act_Z2(v, tag), tag)));
    out.record(pointwise(act_Z1(act_U1(v, tag), tag), act_U1(act_Z1(v, tag), tag)));
    out.record(pointwise(act_Z1(act_U2(v, tag), tag), act_U2(act_Z1(v, tag), tag)));
    out.record(pointwise(act_Z2(act_U1(v, tag), tag), act_U1(act_Z2(v, tag), tag)));
    out.record(pointwise(act_Z2(act_U2(v, tag), tag), act_U2(act_Z2(v, tag), tag)));
  }
  out.detail = "U and Z phase laws, [Z_i, U_j] = 0; 20 random (theta, n, m)";
  return out;
}

Outcome criterion3() {
  Outcome out{.tol = 1e-10};
  RandomSource rng(303);
  for (int i = 0; i < 20; ++i) {
    const auto [n, m] = coprime_pair(rng, 1, 6);
    const auto tag = ModuleTag::right(n, m, rng.uniform(0.0, 1.0));
    const auto v = rng.poly_gauss(m, 2, 2);
    const Complex c1 = rng.complex(1.0), c2 = rng.complex(1.0);
    const auto comm = nabla1(nabla2(v, tag, c2), tag, c1) - nabla2(nabla1(v, tag, c1), tag, c2);
    const Complex kappa{0.0, -4.0 * oracle::kPi * oracle::kPi * m / tag.scale()};
    out.require(std::abs(curvature_constant(tag) - kappa) <= 1e-12 * std::abs(kappa), "curvature constant");
    out.require((comm - kappa * v).is_zero(), "commutator minus kappa is not the canonical zero");
    const Complex displayed{0.0, 2.0 * oracle::kPi * m / tag.scale()};
    out.require(!(comm - displayed * v).is_zero(), "displayed 2 pi i m/scale unexpectedly matches");
    const auto f = rng.torus_element(1);
    out.record(leibniz_defect(v, f, tag, 1));
    out.record(leibniz_defect(v, f, tag, 2));
  }
  out.detail = "kappa = -4 pi^2 i m/scale, not 2 pi i m/scale; Leibniz with diag(1, 2 pi)";
  return out;
}

Outcome criterion4() {
  Outcome out{.tol = 1e-12};
  RandomSource rng(404);
  for (int i = 0; i < 10; ++i) {
    const auto [n, m] = coprime_pair(rng, 1, 6);
    const auto tag = ModuleTag::right(n, m, rng.uniform(0.0, 1.0));
    ComplexStructure cs;
    cs.tau = {rng.uniform(-1.0, 1.0), rng.uniform(-2.0, -0.2)};
    cs.c1 = rng.complex(1.0);
    cs.c2 = rng.complex(1.0);
    const auto basis = holomorphic_basis(tag, cs);
    out.require(basis.size() == std::size_t(m), "basis size differs from m");
    for (const auto& v : basis) out.record(dbar_residual(v, tag, cs));

    auto raises = [&](const ModuleTag& t, const ComplexStructure& c) {
      try {
        holomorphic_basis(t, c);
      } catch (const Error& e) {
        return e.kind() == ErrorKind::NoHolomorphicVectors;
      }
      return false;
    };
    ComplexStructure flipped = cs;
    flipped.tau = std::conj(cs.tau);
    out.require(raises(tag, flipped), "positive scale with Im tau > 0 must raise");
    const auto neg = ModuleTag::right(-n, m, tag.theta);
    if (neg.scale() < 0.0) {
      out.require(raises(neg, cs), "negative scale with Im tau < 0 must raise");
      out.require(holomorphic_basis(neg, flipped).size() == std::size_t(m), "negative scale admits Im tau > 0");
    }
  }
  out.detail = "m vectors, dbar residual, NoHolomorphicVectors in both sign regimes; 10 sets";
  return out;
}

Outcome criterion5() {
  Outcome out{.tol = 1e-9};
  RandomSource rng(505);
  for (const auto& s : kIdentitySets) {
    for (double theta : kIdentityThetas) {
      const auto p = ProductParams::make(s.n, s.m, s.k, s.l, theta);
      const auto f = rng.poly_gauss(s.m, 2, 1), g = rng.poly_gauss(s.l, 2, 1);
      out.record(verify_identification(f, g, p, Generator::U1));
      out.record(verify_identification(f, g, p, Generator::U2));
      out.record(verify_delta_period(f, g, p));
      const auto [z1, z2] = verify_Z_covariance(f, g, p);
      out.record(z1);
      out.record(z2);
    }
  }
  out.detail = "identifications U1, U2, Delta period, Z1/Z2 covariance; 4 x 3 configurations";
  return out;
}

Outcome criterion6() {
  Outcome out{.tol = 1e-10};
  for (const auto& o : oracle_sets()) {
    const auto p = ProductParams::make(o.s.n, o.s.m, o.s.k, o.s.l, o.theta);
    const auto cf = tensor_gaussian_closed(o.alpha, o.beta, o.sigma1, o.c1, o.sigma2, o.c2, p);
    const auto f = PolyGaussVector::gaussian(o.s.m, o.alpha, o.sigma1, o.c1);
    const auto g = PolyGaussVector::gaussian(o.s.l, o.beta, o.sigma2, o.c2);
    const auto grid = ProbeGrid::standard(p);
    out.require(grid.size() == 6 * std::size_t(p.M()), "probe grid is not 6 x M");
    for (double z : grid.z) {
      for (int delta : grid.delta) {
        const Complex direct = oracle::product_map(f, g, p, z, delta);
        const Complex closed = cf.evaluate(z, delta);
        if (direct == Complex(0.0)) {
          out.require(closed == Complex(0.0), "closed form nonzero where the sum is empty");
        } else {
          out.record(std::abs(closed - direct) / std::abs(direct));
        }
      }
    }
  }
  out.detail = "closed form vs direct q-sum, pointwise relative on 6 x M grid; 10 random sets";
  return out;
}

Outcome criterion7() {
  Outcome out{.tol = 1e-8};
  for (const auto& h : holomorphic_sets()) {
    const auto p = ProductParams::make(h.s.n, h.s.m, h.s.k, h.s.l, h.theta);
    const auto sc = structure_constants(p, h.cs);
    const Complex offset = holomorphic_offset(h.cs);
    const auto right = right_factor_basis(p, h.cs.tau, offset);
    const auto left = left_factor_basis(p, h.cs.tau, offset);
    const auto basis = product_basis(p, h.cs);
    const double zs[] = {0.0, 0.3, 0.7};
    for (int alpha = 0; alpha < p.m; ++alpha) {
      for (int beta = 0; beta < p.l; ++beta) {
        for (int gamma = 0; gamma < p.M(); ++gamma) {
          const Complex c = sc.value(alpha, beta, gamma);
          const bool solvable = oracle::crt(alpha, beta, gamma, p.bezout_nm.a, p.m, p.l).has_value();
          out.require(solvable == (c != Complex(0.0)), "zero-entry law");
          Complex ratio[3];
          for (int iz = 0; iz < 3; ++iz) {
            ratio[iz] = oracle::product_map(right[alpha], left[beta], p, zs[iz], gamma) /
                        evaluate(basis[gamma], zs[iz], gamma);
          }
          const double scale = std::max(std::abs(ratio[0]), 1e-300);
          if (solvable) {
            out.record(std::abs(ratio[1] - ratio[0]) / scale);
            out.record(std::abs(ratio[2] - ratio[0]) / scale);
            out.record(std::abs(c - ratio[1]) / std::abs(c));
          } else {
            out.require(ratio[0] == Complex(0.0) && ratio[1] == Complex(0.0), "unsolvable ratio nonzero");
          }
        }
        for (double z : {-1.0, -0.5, 0.0, 0.3, 0.7, 1.0}) {
          for (int delta = 0; delta < p.M(); ++delta) {
            const Complex direct = oracle::product_map(right[alpha], left[beta], p, z, delta);
            const Complex rebuilt = reconstruct_product(sc, basis, alpha, beta, z, delta);
            out.record(std::abs(rebuilt - direct) / (1.0 + std::abs(direct)));
          }
        }
      }
    }
  }
  out.detail = "z-independence, constants vs ratio, zero-entry law, reconstruction; 5 sets";
  return out;
}

Outcome criterion8() {
  Outcome out{.tol = 1e-9};
  RandomSource rng(808);
  const Complex i{0.0, 1.0};
  const double eps = 1e-13;
  double quasi = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Complex s{rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0)};
    const Complex t = rng.complex(0.5);
    const Complex phase = std::exp(-i * oracle::kPi * s - 2.0 * i * oracle::kPi * t);
    const Complex lhs = theta({s, t + s}, eps);
    const Complex rhs = phase * theta({s, t}, eps);
    // Each side is within eps of its exact value; the phase scales the right-hand error.
    quasi = std::max(quasi, std::abs(lhs - rhs) / (eps * (1.0 + std::abs(phase))));
  }
  out.require(quasi <= 1.0, "quasi-periodicity outside requested eps (ratio " + num(quasi) + ")");
  const Complex brute = oracle::theta_sum({0.0, 1.0}, 0.0, 10);
  out.record(std::abs(brute - 1.0864348112));
  out.record(std::abs(theta({{0.0, 1.0}, 0.0}) - 1.0864348112));
  out.detail = "quasi-periodicity within eps = 1e-13 on 20 (s, t) (worst/eps " + num(quasi) +
               "); Theta(i, 0) vs 1.0864348112";
  return out;
}

int cli(const std::vector<std::string>& args, std::string* captured = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run_cli(args, o, e);
  if (captured) *captured = o.str();
  return code;
}

Outcome criterion9() {
  Outcome out{.tol = 0.0};
  int runs = 0;
  auto check = [&](std::vector<std::string> args, const std::string& label) {
    args.insert(args.begin(), "verify-all");
    ++runs;
    out.require(cli(args) == 0, "verify-all failed for " + label);
  };
  for (const auto& s : kIdentitySets) {
    for (double theta : kIdentityThetas) {
      check({"--theta", num(theta), "--nm", std::to_string(s.n) + "," + std::to_string(s.m), "--kl",
             std::to_string(s.k) + "," + std::to_string(s.l), "--tau", "0,-1"},
            "identity set");
    }
  }
  for (const auto& o : oracle_sets()) {
    check({"--theta", num(o.theta), "--nm", std::to_string(o.s.n) + "," + std::to_string(o.s.m), "--kl",
           std::to_string(o.s.k) + "," + std::to_string(o.s.l), "--tol", "1e-10"},
          "oracle set");
  }
  for (const auto& h : holomorphic_sets()) {
    check({"--theta", num(h.theta), "--nm", std::to_string(h.s.n) + "," + std::to_string(h.s.m), "--kl",
           std::to_string(h.s.k) + "," + std::to_string(h.s.l), "--tau", complex_arg(h.cs.tau), "--c1",
           complex_arg(h.cs.c1), "--c2", complex_arg(h.cs.c2), "--tol", "1e-8"},
          "theta-basis set");
  }
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"verify-all", "--seed", "42", "--theta", "sqrt2-1", "--nm", "3,2", "--kl", "2,3"},
        std::vector<std::string>{"algebra-check", "--seed", "42"},
        std::vector<std::string>{"structure-constants", "--nm", "1,2", "--kl", "1,3", "--tau", "0.3,-0.8"}}) {
    std::string a, b;
    cli(args, &a);
    cli(args, &b);
    out.require(!a.empty() && a == b, "output differs between identical runs of " + args[0]);
    out.require(nctorus::Json::parse(a).at("schema") == 1, "schema field missing");
  }
  out.detail = "verify-all exit 0 on " + std::to_string(runs) + " configurations; byte-identical JSON";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const bool ok = o.ok();
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s  max_residual=%.3e  tol=%.0e  %s\n", id, ok ? "PASS" : "FAIL", o.residual, o.tol,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
