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

#include "nctorus/serialization.hpp"

#include <string>

namespace nctorus {

namespace {

template <typename Fn>
auto parsing(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  return parsing("complex", [&] {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::ParseError, "complex must be [re, im]");
    return Complex{j.at(0).get<double>(), j.at(1).get<double>()};
  });
}

Json to_json(const PolyGaussVector& v) {
  Json terms = Json::array();
  for (const auto& term : v.terms()) {
    Json poly = Json::array();
    for (Complex coef : term.poly) poly.push_back(to_json(coef));
    terms.push_back({{"poly", poly}, {"sigma", to_json(term.sigma)}, {"c", to_json(term.c)}, {"mu", term.mu}});
  }
  return {{"m", v.components()}, {"terms", terms}};
}

PolyGaussVector polygauss_from_json(const Json& j) {
  return parsing("PolyGaussVector", [&] {
    std::vector<PolyGaussTerm> terms;
    for (const auto& t : j.at("terms")) {
      PolyGaussTerm term;
      for (const auto& coef : t.at("poly")) term.poly.push_back(complex_from_json(coef));
      term.sigma = complex_from_json(t.at("sigma"));
      term.c = complex_from_json(t.at("c"));
      term.mu = t.at("mu").get<int>();
      terms.push_back(std::move(term));
    }
    return PolyGaussVector(j.at("m").get<int>(), std::move(terms));
  });
}

Json to_json(const BezoutPair& pair) { return {{"a", pair.a}, {"b", pair.b}, {"n", pair.n}, {"m", pair.m}}; }

Json to_json(const ModuleTag& tag) {
  return {{"n", tag.n},
          {"m", tag.m},
          {"theta", tag.theta},
          {"side", tag.side == Side::right ? "right" : "left"},
          {"bezout", to_json(tag.bezout)}};
}

ModuleTag module_tag_from_json(const Json& j) {
  return parsing("ModuleTag", [&] {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const double theta = j.at("theta").get<double>();
    const std::string side = j.at("side").get<std::string>();
    std::optional<BezoutPair> pair;
    if (j.contains("bezout")) {
      pair = BezoutPair{j.at("bezout").at("a").get<int>(), j.at("bezout").at("b").get<int>(), n, m};
    }
    if (side == "right") return ModuleTag::right(n, m, theta, pair);
    if (side == "left") return ModuleTag::left(n, m, theta, pair);
    throw Error(ErrorKind::ParseError, "side must be \"right\" or \"left\"");
  });
}

Json to_json(const BimoduleProfile& profile) {
  return {{"theta_prime", profile.theta_prime},
          {"theta_double_prime", profile.theta_double_prime},
          {"M", profile.M},
          {"N_prime", profile.N_prime},
          {"N_double_prime", profile.N_double_prime}};
}

Json to_json(const ComplexStructure& cs) {
  return {{"tau", to_json(cs.tau)}, {"c1", to_json(cs.c1)}, {"c2", to_json(cs.c2)}, {"lambda2", to_json(cs.lambda2)}};
}

ComplexStructure complex_structure_from_json(const Json& j) {
  return parsing("ComplexStructure", [&] {
    ComplexStructure cs;
    cs.tau = complex_from_json(j.at("tau"));
    if (j.contains("c1")) cs.c1 = complex_from_json(j.at("c1"));
    if (j.contains("c2")) cs.c2 = complex_from_json(j.at("c2"));
    if (j.contains("lambda2")) cs.lambda2 = complex_from_json(j.at("lambda2"));
    validate(cs);
    return cs;
  });
}

Json to_json(const ProductParams& p) {
  return {{"n", p.n},
          {"m", p.m},
          {"k", p.k},
          {"l", p.l},
          {"theta", p.theta},
          {"r", p.r},
          {"bezout_nm", to_json(p.bezout_nm)},
          {"bezout_kl", to_json(p.bezout_kl)},
          {"profile", to_json(p.profile)}};
}

Json structure_constants_json(const StructureConstants& sc, const ProductParams& p, Complex tau,
                              Complex offset1, Complex offset2) {
  Json entries = Json::array();
  for (int alpha = 0; alpha < sc.m; ++alpha) {
    for (int beta = 0; beta < sc.l; ++beta) {
      for (int gamma = 0; gamma < sc.M; ++gamma) {
        const StructureEntry& e = sc.at(alpha, beta, gamma);
        Json entry = {{"alpha", alpha},
                      {"beta", beta},
                      {"gamma", gamma},
                      {"re", e.value.real()},
                      {"im", e.value.imag()},
                      {"q0", nullptr}};
        if (e.q0) {
          entry["q0"] = *e.q0;
          entry["s"] = to_json(e.s);
          entry["t"] = to_json(e.t);
          entry["K"] = to_json(e.K);
        }
        entries.push_back(std::move(entry));
      }
    }
  }
  Json params = to_json(p);
  params["tau"] = to_json(tau);
  params["offset1"] = to_json(offset1);
  params["offset2"] = to_json(offset2);
  return {{"shape", {sc.m, sc.l, sc.M}}, {"entries", entries}, {"params", params}};
}

}  // namespace nctorus
