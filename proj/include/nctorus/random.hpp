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

#ifndef NCTORUS_RANDOM_HPP
#define NCTORUS_RANDOM_HPP

#include <random>

#include "nctorus/gaussian_space.hpp"
#include "nctorus/nc_algebra.hpp"

namespace nctorus {

// Seeded generators for randomized property suites.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex complex(double radius) { return {uniform(-radius, radius), uniform(-radius, radius)}; }

  // Coefficients on every mode of [-box, box]^2, each kept with probability 1/2.
  TorusElement torus_element(int box) {
    TorusElement f;
    for (int n1 = -box; n1 <= box; ++n1) {
      for (int n2 = -box; n2 <= box; ++n2) {
        if (integer(0, 1) == 1) f.add({n1, n2}, complex(1.0));
      }
    }
    return f;
  }

  // Up to `terms` Gaussians with polynomial prefactors of degree <= max_degree.
  PolyGaussVector poly_gauss(int m, int terms, int max_degree) {
    std::vector<PolyGaussTerm> out;
    for (int i = 0; i < terms; ++i) {
      PolyGaussTerm term;
      term.poly.resize(static_cast<std::size_t>(integer(0, max_degree) + 1));
      for (auto& coef : term.poly) coef = complex(1.0);
      term.sigma = {uniform(0.5, 2.0), uniform(-0.5, 0.5)};
      term.c = complex(0.5);
      term.mu = integer(0, m - 1);
      out.push_back(std::move(term));
    }
    return PolyGaussVector(m, std::move(out));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nctorus

#endif  // NCTORUS_RANDOM_HPP
