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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nctorus/gaussian_space.hpp"
#include "nctorus/random.hpp"
#include "oracles.hpp"

using namespace nctorus;

namespace {

// Max over the probe grid of |lhs(x, mu) - expected(x, mu)| relative to the scale of lhs.
template <class F>
double pointwise(const PolyGaussVector& lhs, F expected) {
  double diff = 0.0, size = 0.0;
  for (double x : probe_points()) {
    for (int mu = 0; mu < lhs.components(); ++mu) {
      const Complex a = evaluate(lhs, x, mu);
      diff = std::max(diff, std::abs(a - expected(x, mu)));
      size = std::max(size, std::abs(a));
    }
  }
  return diff / (1.0 + size);
}

}  // namespace

TEST_CASE("evaluate single Gaussian") {
  const auto v = PolyGaussVector::gaussian(2, 0, 1.0, 0.0);
  CHECK(evaluate(v, 0.0, 0) == Complex(1.0));
  CHECK(std::abs(evaluate(v, 1.0, 0) - std::exp(-0.5)) < 1e-15);
  CHECK(evaluate(v, 0.0, 1) == Complex(0.0));
  CHECK_THROWS_AS(evaluate(v, 0.0, 2), Error);
  CHECK_THROWS_AS(evaluate(v, 0.0, -1), Error);
}

TEST_CASE("constructor preconditions") {
  PolyGaussTerm bad;
  bad.poly = {1.0};
  bad.sigma = {-1.0, 0.0};
  CHECK_THROWS_AS(PolyGaussVector(1, {bad}), Error);
  PolyGaussTerm off;
  off.poly = {1.0};
  off.mu = 3;
  CHECK_THROWS_AS(PolyGaussVector(2, {off}), Error);
}

TEST_CASE("shift") {
  const auto v = PolyGaussVector::gaussian(1, 0, 1.0, 0.0);
  CHECK(max_abs_difference(shift(v, 0.0), v) == 0.0);
  CHECK(std::abs(evaluate(shift(v, 1.0), 1.0, 0) - 1.0) < 1e-15);
  PolyGaussTerm xt;
  xt.poly = {0.0, 1.0};
  const PolyGaussVector x(1, {xt});
  CHECK(std::abs(evaluate(shift(x, 2.0), 2.0, 0)) < 1e-15);
}

TEST_CASE("operations commute with evaluation") {
  RandomSource rng(21);
  for (int i = 0; i < 20; ++i) {
    const int m = rng.integer(1, 4);
    const auto v = rng.poly_gauss(m, 3, 3);
    const double s = rng.uniform(-2.0, 2.0);
    const Complex beta = rng.complex(1.0);
    CHECK(pointwise(shift(v, s), [&](double x, int mu) { return evaluate(v, x - s, mu); }) < 1e-12);
    CHECK(pointwise(mul_exp(v, beta), [&](double x, int mu) { return std::exp(beta * x) * evaluate(v, x, mu); }) <
          1e-12);
    CHECK(pointwise(mul_x(v), [&](double x, int mu) { return x * evaluate(v, x, mu); }) < 1e-12);
    const double h = 1e-4;
    auto derivative = [&](double x, int mu) {
      return (evaluate(v, x - 2 * h, mu) - 8.0 * evaluate(v, x - h, mu) + 8.0 * evaluate(v, x + h, mu) -
              evaluate(v, x + 2 * h, mu)) /
             (12 * h);
    };
    CHECK(pointwise(differentiate(v), derivative) < 1e-8);
    const auto w = rng.poly_gauss(m, 2, 2);
    const Complex a = rng.complex(1.0);
    CHECK(pointwise(axpy(a, v, w), [&](double x, int mu) { return a * evaluate(v, x, mu) + evaluate(w, x, mu); }) <
          1e-12);
    CHECK(pointwise(rotate_components(v, 1),
                    [&](double x, int mu) { return evaluate(v, x, oracle::wrap(mu - 1, m)); }) < 1e-15);
  }
}

TEST_CASE("differentiate rules") {
  const auto v = PolyGaussVector::gaussian(1, 0, 1.0, 0.0);
  const auto d = differentiate(v);
  REQUIRE(d.terms().size() == 1);
  const auto& poly = d.terms()[0].poly;
  REQUIRE(poly.size() == 2);
  CHECK(std::abs(poly[0]) < 1e-15);
  CHECK(std::abs(poly[1] + 1.0) < 1e-15);
  CHECK(differentiate(PolyGaussVector(3)).is_zero());

  RandomSource rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto w = rng.poly_gauss(2, 3, 3);
    CHECK((differentiate(mul_x(w)) - mul_x(differentiate(w)) - w).is_zero());
  }
}

TEST_CASE("canonical zero and merging") {
  RandomSource rng(8);
  for (int i = 0; i < 10; ++i) {
    const auto v = rng.poly_gauss(3, 4, 3);
    CHECK((v - v).is_zero());
  }
  const auto g = PolyGaussVector::gaussian(2, 1, {1.0, 0.5}, 0.2);
  const auto twice = g + g;
  CHECK(twice.terms().size() == 1);
  CHECK(std::abs(evaluate(twice, 0.3, 1) - 2.0 * evaluate(g, 0.3, 1)) < 1e-15);
}

TEST_CASE("approx_eq") {
  const auto v = PolyGaussVector::gaussian(2, 0, 1.0, 0.0);
  CHECK(approx_eq(v, v, 1e-15));
  CHECK_FALSE(approx_eq(v, 1.001 * v, 1e-6));
  CHECK_THROWS_AS(approx_eq(v, PolyGaussVector(3), 1e-6), Error);
  CHECK(probe_points().size() == 41);
  CHECK(probe_points().front() == -5.0);
  CHECK(probe_points().back() == 5.0);
}
