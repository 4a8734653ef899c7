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

#ifndef TUTTICE_VERIFY_HPP_
#define TUTTICE_VERIFY_HPP_

#include <string>
#include <vector>

#include "tuttice/polymatroid.hpp"

namespace tuttice {

enum class CheckStatus {
  kPass,
  kFail,
  kSkip,  // not applicable or over budget for this input
  kInfo,  // evaluated and reported, but not expected to hold for the input
};

const char* status_name(CheckStatus status);

struct CheckResult {
  std::string name;
  std::string statement;  // the identity or property being tested
  CheckStatus status = CheckStatus::kSkip;
  std::string detail;     // witness on failure, reason for skip/info
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  // True iff no check failed.
  bool passed() const;
};

enum class VerifyLevel { kQuick, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kQuick;
  int series_order = 6;
};

// Runs every applicable check on m.  Failures are report entries, never
// exceptions.
VerificationReport verify(const Polymatroid& m, const VerifyOptions& options);

}  // namespace tuttice

#endif  // TUTTICE_VERIFY_HPP_
