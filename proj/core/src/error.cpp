// Copyright 2026 The Tuttice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tuttice/error.hpp"

namespace tuttice {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kNegativeRank: return "NegativeRank";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kNotAPolymatroidBaseSet: return "NotAPolymatroidBaseSet";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kSTooSmall: return "STooSmall";
    case ErrorCode::kNotACircuitHyperplane: return "NotACircuitHyperplane";
    case ErrorCode::kNotAMatroid: return "NotAMatroid";
    case ErrorCode::kNotABase: return "NotABase";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kDegreeExceeded: return "DegreeExceeded";
    case ErrorCode::kInexactDivision: return "InexactDivision";
    case ErrorCode::kUniquenessViolation: return "UniquenessViolation";
    case ErrorCode::kCountOverflow: return "CountOverflow";
    case ErrorCode::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace tuttice
