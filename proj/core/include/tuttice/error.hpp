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

#ifndef TUTTICE_ERROR_HPP_
#define TUTTICE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tuttice {

enum class ErrorCode {
  kAxiomViolation,
  kNegativeRank,
  kInvalidParams,
  kInvalidEdge,
  kNotAPolymatroidBaseSet,
  kSizeCapExceeded,
  kSTooSmall,
  kNotACircuitHyperplane,
  kNotAMatroid,
  kNotABase,
  kNotABasis,
  kDegreeExceeded,
  kInexactDivision,
  kUniquenessViolation,
  kCountOverflow,
  kMalformedInput,
};

// Stable machine-readable name, e.g. "AxiomViolation".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-name prefix carried by what().
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace tuttice

#endif  // TUTTICE_ERROR_HPP_
