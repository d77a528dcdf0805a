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

#include "nctorus/common.hpp"

namespace nctorus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WrongSide: return "WrongSide";
    case ErrorKind::SignAssumptionViolated: return "SignAssumptionViolated";
    case ErrorKind::NoHolomorphicVectors: return "NoHolomorphicVectors";
    case ErrorKind::InvalidS: return "InvalidS";
    case ErrorKind::InvalidSigma: return "InvalidSigma";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace nctorus
