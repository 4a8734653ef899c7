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

#include "tuttice/subset.hpp"

#include <cctype>
#include <sstream>

#include "tuttice/error.hpp"

namespace tuttice {

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

std::vector<int> labels_of(Subset s) {
  std::vector<int> out = elements_of(s);
  for (int& e : out) ++e;
  return out;
}

std::string subset_key(Subset s, int n) {
  std::string key;
  for (int e : elements_of(s)) {
    if (n >= 10 && !key.empty()) key += ',';
    key += std::to_string(e + 1);
  }
  return key;
}

Subset parse_subset_key(const std::string& key, int n) {
  Subset s = 0;
  auto add = [&](int label) {
    if (label < 1 || label > n) {
      throw Error(ErrorCode::kMalformedInput,
                  "subset key '" + key + "' names element outside 1.." +
                      std::to_string(n));
    }
    if (contains(s, label - 1)) {
      throw Error(ErrorCode::kMalformedInput,
                  "subset key '" + key + "' repeats an element");
    }
    s |= singleton(label - 1);
  };
  if (key.empty()) return s;
  if (n >= 10 || key.find(',') != std::string::npos) {
    std::stringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty() ||
          part.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::kMalformedInput, "bad subset key '" + key + "'");
      }
      add(std::stoi(part));
    }
    return s;
  }
  for (char c : key) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kMalformedInput, "bad subset key '" + key + "'");
    }
    add(c - '0');
  }
  return s;
}

}  // namespace tuttice
