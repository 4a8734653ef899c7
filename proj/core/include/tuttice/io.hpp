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

#ifndef TUTTICE_IO_HPP_
#define TUTTICE_IO_HPP_

#include <string>
#include <string_view>

#include "tuttice/bivar_poly.hpp"
#include "tuttice/polymatroid.hpp"

namespace tuttice {

// Parses one of
//   {"type":"table","n":3,"rank":{"":0,"1":1,...,"123":1}}
//   {"type":"uniform","r":1,"n":2}
//   {"type":"graph","vertices":3,"edges":[[1,2],[2,3],[1,3]]}
//   {"type":"bases","vectors":[[1,0,0],[0,1,0]]}
// Throws MalformedInput for syntax or schema errors; constructor errors
// (AxiomViolation, InvalidEdge, ...) propagate unchanged.
Polymatroid parse_polymatroid(std::string_view json_text);

// The "table" form of m, compact JSON with keys in subset-bitmask order.
std::string polymatroid_to_json(const Polymatroid& m);

// {"vars":["x","y"],"terms":[{"i":2,"j":0,"c":1},...]}; terms in descending
// graded order.  Coefficients outside the 64-bit range are strings.
std::string polynomial_to_json(const BivarPoly& p);
BivarPoly parse_polynomial(std::string_view json_text);

}  // namespace tuttice

#endif  // TUTTICE_IO_HPP_
