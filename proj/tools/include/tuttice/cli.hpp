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

#ifndef TUTTICE_CLI_HPP_
#define TUTTICE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tuttice::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

// Runs one `tuttice` invocation.  `args` excludes the program name.  Input
// is read from -i FILE, --json TEXT, or `in`.  Results go to `out`; input
// errors are reported on `err` as a one-line JSON object.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace tuttice::cli

#endif  // TUTTICE_CLI_HPP_
