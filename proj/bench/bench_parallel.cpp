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

// Times the OpenMP kernels against their serial references.
//
//   bench_parallel [repetitions]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "nctorus/random.hpp"
#include "nctorus/tensor_product.hpp"

using namespace nctorus;

namespace {

template <class F>
double median_ms(int reps, F&& body) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 5;
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto p = ProductParams::make(5, 7, 4, 9, std::sqrt(2.0) - 1.0);
  const Complex tau{0.1, -0.9}, offset{0.02, -0.01};
  std::printf("structure constants: (n,m,k,l) = (5,7,4,9), M = %d, %d entries\n", p.M(), p.m * p.l * p.M());

  StructureConstants a, b;
  const double sc_serial = median_ms(reps, [&] { a = structure_constants_serial(p, tau, offset, offset); });
  const double sc_parallel = median_ms(reps, [&] { b = structure_constants(p, tau, offset, offset); });
  bool same = a.entries.size() == b.entries.size();
  for (std::size_t i = 0; same && i < a.entries.size(); ++i) same = a.entries[i].value == b.entries[i].value;
  report("structure_constants", sc_serial, sc_parallel, same);

  RandomSource rng(1);
  const auto f = rng.poly_gauss(p.m, 4, 3), g = rng.poly_gauss(p.l, 4, 3);
  ProbeGrid grid = ProbeGrid::standard(p);
  grid.z.clear();
  for (int i = 0; i <= 40; ++i) grid.z.push_back(-2.0 + 0.1 * i);
  std::vector<Complex> u, v;
  const double grid_serial = median_ms(reps, [&] { u = product_map_grid_serial(f, g, p, grid); });
  const double grid_parallel = median_ms(reps, [&] { v = product_map_grid(f, g, p, grid); });
  report("product_map_grid", grid_serial, grid_parallel, u == v);
  return same && u == v ? 0 : 1;
}
