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

#ifndef TUTTICE_CORPUS_HPP_
#define TUTTICE_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tuttice/polymatroid.hpp"

namespace tuttice {

struct NamedPolymatroid {
  std::string name;
  Polymatroid m;
};

// The rank-one matroid on {1,2,3} with bases {1}, {2} (element 3 a loop).
Polymatroid small_example();
// small_example() with its rank function doubled.
Polymatroid doubled_small_example();

// U_{r,n} for 1 <= n <= max_n, 0 <= r <= n.
std::vector<NamedPolymatroid> uniform_corpus(int max_n = 6);

// Edge lists of all connected simple graphs on 2..max_vertices vertices,
// one per isomorphism class, in a deterministic order.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
std::vector<Graph> connected_graphs(int max_vertices = 5);
std::vector<NamedPolymatroid> graphic_corpus(int max_vertices = 5);

// Matroids from random rank tables: column matroids of random matrices over
// GF(2), GF(3), GF(5) and random sparse paving matroids, each validated and
// filtered through the matroid test.  Deterministic for a given seed.
std::vector<NamedPolymatroid> random_matroid_corpus(
    int count = 100, int max_n = 6, std::uint32_t seed = 20260101U);

// Uniform, graphic and random corpora, in that order.
std::vector<NamedPolymatroid> matroid_corpus();

// Corpus members with at most max_n elements.
std::vector<NamedPolymatroid> limit_size(std::vector<NamedPolymatroid> corpus,
                                         int max_n);

// Every single-element extension of a matroid (new element n+1), one per
// modular cut, without duplicates.
std::vector<Polymatroid> single_element_extensions(const Polymatroid& m);

}  // namespace tuttice

#endif  // TUTTICE_CORPUS_HPP_
