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

#ifndef TUTTICE_SUBSET_HPP_
#define TUTTICE_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tuttice {

// Subsets of the ground set are bitmasks; bit k is element k+1.
using Subset = std::uint32_t;

// Ground sets hold 1..kMaxGroundSize elements; rank tables are 2^n dense.
inline constexpr int kMaxGroundSize = 16;

constexpr Subset full_set(int n) { return (Subset{1} << n) - 1; }
constexpr Subset singleton(int element) { return Subset{1} << element; }
constexpr bool contains(Subset s, int element) { return (s >> element) & 1U; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int cardinality(Subset s) { return std::popcount(s); }

// 0-based element indices in increasing order.
std::vector<int> elements_of(Subset s);

// 1-based labels in increasing order, e.g. {0,2} -> [1,3].
std::vector<int> labels_of(Subset s);

// "13" for n <= 9, "1,3" otherwise; "" for the empty set.
std::string subset_key(Subset s, int n);

// Parses a key written by subset_key.  For n >= 10 labels must be
// comma-separated.  Throws MalformedInput.
Subset parse_subset_key(const std::string& key, int n);

}  // namespace tuttice

#endif  // TUTTICE_SUBSET_HPP_
