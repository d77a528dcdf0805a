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

#ifndef NCTORUS_SERIALIZATION_HPP
#define NCTORUS_SERIALIZATION_HPP

#include <json.hpp>

#include "nctorus/tensor_product.hpp"

namespace nctorus {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im] pairs throughout.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

// {"m": int, "terms": [{"poly": [[re,im],...], "sigma": [re,im], "c": [re,im], "mu": int}]}
Json to_json(const PolyGaussVector& v);
PolyGaussVector polygauss_from_json(const Json& j);

Json to_json(const BezoutPair& pair);
Json to_json(const ModuleTag& tag);
ModuleTag module_tag_from_json(const Json& j);
Json to_json(const BimoduleProfile& profile);

Json to_json(const ComplexStructure& cs);
ComplexStructure complex_structure_from_json(const Json& j);

Json to_json(const ProductParams& p);

// {"shape": [m, l, M], "entries": [{"alpha", "beta", "gamma", "re", "im", "q0", "s", "t", "K"}],
//  "params": {...}}. q0 is null for entries whose index congruences have no solution.
Json structure_constants_json(const StructureConstants& sc, const ProductParams& p, Complex tau,
                              Complex offset1, Complex offset2);

}  // namespace nctorus

#endif  // NCTORUS_SERIALIZATION_HPP
