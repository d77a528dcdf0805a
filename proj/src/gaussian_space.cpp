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

#include "nctorus/gaussian_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nctorus {

namespace {

constexpr double kPruneRelative = 1e-14;
constexpr double kMergeRelative = 1e-13;

bool close(Complex a, Complex b) {
  return std::abs(a - b) <= kMergeRelative * std::max(1.0, std::abs(a));
}

void check_term(const PolyGaussTerm& term, int m) {
  if (term.mu < 0 || term.mu >= m) {
    throw Error(ErrorKind::IndexOutOfRange,
                "component " + std::to_string(term.mu) + " outside Z_" + std::to_string(m));
  }
  if (!(term.sigma.real() > 0.0)) {
    throw Error(ErrorKind::InvalidSigma, "Re(sigma) must be positive");
  }
}

std::vector<double> magnitudes(const std::vector<Complex>& poly) {
  std::vector<double> out(poly.size());
  std::transform(poly.begin(), poly.end(), out.begin(), [](Complex z) { return std::abs(z); });
  return out;
}

}  // namespace

// Collects terms together with, per coefficient, the sum of magnitudes of the
// contributions that produced it. A coefficient that cancels below
// kPruneRelative of its contributions is rounding noise and is dropped.
class TermAccumulator {
 public:
  explicit TermAccumulator(int m) : m_(m) {}

  void add(PolyGaussTerm term, std::vector<double> mags) {
    for (Entry& entry : entries_) {
      if (entry.term.mu == term.mu && close(entry.term.sigma, term.sigma) && close(entry.term.c, term.c)) {
        if (entry.term.poly.size() < term.poly.size()) {
          entry.term.poly.resize(term.poly.size());
          entry.mags.resize(term.poly.size());
        }
        for (std::size_t k = 0; k < term.poly.size(); ++k) {
          entry.term.poly[k] += term.poly[k];
          entry.mags[k] += mags[k];
        }
        return;
      }
    }
    entries_.push_back({std::move(term), std::move(mags)});
  }

  void add(const PolyGaussTerm& term, Complex alpha = 1.0) {
    PolyGaussTerm scaled = term;
    for (Complex& coef : scaled.poly) coef *= alpha;
    auto mags = magnitudes(scaled.poly);
    add(std::move(scaled), std::move(mags));
  }

  PolyGaussVector finish() && {
    std::vector<PolyGaussTerm> out;
    out.reserve(entries_.size());
    for (Entry& entry : entries_) {
      auto& poly = entry.term.poly;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        if (!(std::abs(poly[k]) > kPruneRelative * entry.mags[k])) poly[k] = 0.0;
      }
      while (!poly.empty() && poly.back() == Complex{}) poly.pop_back();
      if (!poly.empty()) out.push_back(std::move(entry.term));
    }
    return PolyGaussVector(m_, std::move(out), true);
  }

 private:
  struct Entry {
    PolyGaussTerm term;
    std::vector<double> mags;
  };
  int m_;
  std::vector<Entry> entries_;
};

Complex PolyGaussTerm::evaluate(double x) const {
  Complex acc{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  if (acc == Complex{}) return acc;
  return acc * std::exp(-0.5 * sigma * x * x - c * x);
}

PolyGaussVector::PolyGaussVector(int m) : m_(m) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "number of components must be positive");
}

PolyGaussVector::PolyGaussVector(int m, std::vector<PolyGaussTerm> terms) : PolyGaussVector(m) {
  TermAccumulator acc(m);
  for (auto& term : terms) {
    check_term(term, m);
    acc.add(term);
  }
  *this = std::move(acc).finish();
}

PolyGaussVector::PolyGaussVector(int m, std::vector<PolyGaussTerm> terms, bool)
    : m_(m), terms_(std::move(terms)) {}

PolyGaussVector PolyGaussVector::gaussian(int m, int mu, Complex sigma, Complex c, Complex amplitude) {
  return PolyGaussVector(m, {PolyGaussTerm{{amplitude}, sigma, c, mu}});
}

Complex evaluate(const PolyGaussVector& v, double x, int mu) {
  if (mu < 0 || mu >= v.components()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "component " + std::to_string(mu) + " outside Z_" + std::to_string(v.components()));
  }
  Complex acc{};
  for (const auto& term : v.terms()) {
    if (term.mu == mu) acc += term.evaluate(x);
  }
  return acc;
}

PolyGaussVector shift(const PolyGaussVector& v, double s) {
  if (s == 0.0) return v;
  TermAccumulator acc(v.components());
  for (const auto& term : v.terms()) {
    // -sigma (x-s)^2/2 - c (x-s) = -sigma x^2/2 - (c - sigma s) x + (c s - sigma s^2/2)
    const Complex factor = std::exp(term.c * s - 0.5 * term.sigma * s * s);
    const std::size_t deg = term.poly.size();
    std::vector<Complex> poly(deg);
    std::vector<double> mags(deg, 0.0);
    for (std::size_t k = 0; k < deg; ++k) {
      // p_k (x - s)^k = p_k sum_j C(k, j) (-s)^{k-j} x^j
      double binom = 1.0;
      double power = 1.0;
      for (std::size_t j = k + 1; j-- > 0;) {
        const Complex contrib = term.poly[k] * binom * power * factor;
        poly[j] += contrib;
        mags[j] += std::abs(contrib);
        binom = binom * static_cast<double>(j) / static_cast<double>(k - j + 1);
        power *= -s;
      }
    }
    acc.add(PolyGaussTerm{std::move(poly), term.sigma, term.c - term.sigma * s, term.mu}, std::move(mags));
  }
  return std::move(acc).finish();
}

PolyGaussVector mul_exp(const PolyGaussVector& v, Complex beta) {
  TermAccumulator acc(v.components());
  for (auto term : v.terms()) {
    term.c -= beta;
    acc.add(term);
  }
  return std::move(acc).finish();
}

PolyGaussVector mul_x(const PolyGaussVector& v) {
  TermAccumulator acc(v.components());
  for (auto term : v.terms()) {
    term.poly.insert(term.poly.begin(), Complex{});
    acc.add(term);
  }
  return std::move(acc).finish();
}

PolyGaussVector differentiate(const PolyGaussVector& v) {
  TermAccumulator acc(v.components());
  for (const auto& term : v.terms()) {
    // d/dx [P e^E] = (P' - (sigma x + c) P) e^E
    const std::size_t deg = term.poly.size();
    std::vector<Complex> poly(deg + 1);
    std::vector<double> mags(deg + 1, 0.0);
    for (std::size_t k = 0; k < deg; ++k) {
      const Complex p = term.poly[k];
      if (k > 0) {
        const Complex d = static_cast<double>(k) * p;
        poly[k - 1] += d;
        mags[k - 1] += std::abs(d);
      }
      const Complex lin = -term.c * p;
      poly[k] += lin;
      mags[k] += std::abs(lin);
      const Complex quad = -term.sigma * p;
      poly[k + 1] += quad;
      mags[k + 1] += std::abs(quad);
    }
    acc.add(PolyGaussTerm{std::move(poly), term.sigma, term.c, term.mu}, std::move(mags));
  }
  return std::move(acc).finish();
}

PolyGaussVector axpy(Complex alpha, const PolyGaussVector& v, const PolyGaussVector& w) {
  if (v.components() != w.components()) {
    throw Error(ErrorKind::DimensionMismatch, "axpy on vectors with different component counts");
  }
  TermAccumulator acc(v.components());
  for (const auto& term : w.terms()) acc.add(term);
  if (alpha != Complex{}) {
    for (const auto& term : v.terms()) acc.add(term, alpha);
  }
  return std::move(acc).finish();
}

PolyGaussVector scale(const PolyGaussVector& v, Complex alpha) {
  TermAccumulator acc(v.components());
  if (alpha != Complex{}) {
    for (const auto& term : v.terms()) acc.add(term, alpha);
  }
  return std::move(acc).finish();
}

PolyGaussVector rotate_components(const PolyGaussVector& v, int steps) {
  TermAccumulator acc(v.components());
  for (auto term : v.terms()) {
    term.mu = wrap_index(static_cast<long long>(term.mu) + steps, v.components());
    acc.add(term);
  }
  return std::move(acc).finish();
}

PolyGaussVector component_phase(const PolyGaussVector& v, const std::function<Complex(int)>& phase) {
  TermAccumulator acc(v.components());
  for (const auto& term : v.terms()) acc.add(term, phase(term.mu));
  return std::move(acc).finish();
}

PolyGaussVector operator+(const PolyGaussVector& v, const PolyGaussVector& w) { return axpy(1.0, v, w); }
PolyGaussVector operator-(const PolyGaussVector& v, const PolyGaussVector& w) { return axpy(-1.0, w, v); }
PolyGaussVector operator*(Complex alpha, const PolyGaussVector& v) { return scale(v, alpha); }

std::span<const double> probe_points() {
  static const std::array<double, 41> points = [] {
    std::array<double, 41> p{};
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = -5.0 + 0.25 * static_cast<double>(i);
    return p;
  }();
  return points;
}

double max_abs(const PolyGaussVector& v) {
  double worst = 0.0;
  for (int mu = 0; mu < v.components(); ++mu) {
    for (double x : probe_points()) worst = std::max(worst, std::abs(evaluate(v, x, mu)));
  }
  return worst;
}

double max_abs_difference(const PolyGaussVector& v, const PolyGaussVector& w) {
  if (v.components() != w.components()) {
    throw Error(ErrorKind::DimensionMismatch, "vectors have different component counts");
  }
  double worst = 0.0;
  for (int mu = 0; mu < v.components(); ++mu) {
    for (double x : probe_points()) {
      worst = std::max(worst, std::abs(evaluate(v, x, mu) - evaluate(w, x, mu)));
    }
  }
  return worst;
}

bool approx_eq(const PolyGaussVector& v, const PolyGaussVector& w, double tol) {
  return max_abs_difference(v, w) <= tol * (1.0 + max_abs(v));
}

}  // namespace nctorus
