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

#ifndef TUTTICE_POLYMATROID_HPP_
#define TUTTICE_POLYMATROID_HPP_

#include <span>
#include <utility>
#include <vector>

#include "tuttice/subset.hpp"

namespace tuttice {

// Integer point of the base polytope; coordinate k belongs to element k+1.
using BaseVector = std::vector<int>;

// A polymatroid on {1..n} given by its dense rank table.  Instances are
// immutable and always satisfy normalization, monotonicity and
// submodularity; the only way to obtain one is through a validating
// constructor below.
class Polymatroid {
 public:
  int size() const noexcept { return n_; }
  Subset ground() const noexcept { return full_set(n_); }
  int rank(Subset s) const { return table_[s]; }
  int rank() const { return table_.back(); }
  std::span<const int> table() const noexcept { return table_; }

  // r({e}) <= 1 and unit increase r(S+e) <= r(S)+1 everywhere.
  bool is_matroid() const noexcept { return matroid_; }

  // Largest singleton rank.
  int max_singleton_rank() const;

  friend bool operator==(const Polymatroid& a, const Polymatroid& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend Polymatroid make_polymatroid(int n, std::vector<int> table);
  Polymatroid(int n, std::vector<int> table, bool matroid)
      : n_(n), table_(std::move(table)), matroid_(matroid) {}

  int n_;
  std::vector<int> table_;
  bool matroid_;
};

// Validates a rank table indexed by subset bitmask (length 2^n).
// Throws SizeCapExceeded, InvalidParams (wrong length), NegativeRank or
// AxiomViolation naming the failed axiom and a witness pair.
Polymatroid make_polymatroid(int n, std::vector<int> table);

// U_{r,n}: r(S) = min(|S|, r).
Polymatroid uniform_matroid(int r, int n);

// Cycle matroid of a multigraph on vertices 1..n_vertices; element k is
// edges[k].  Self-loops and parallel edges are allowed.
Polymatroid graphic_matroid(int n_vertices,
                            std::span<const std::pair<int, int>> edges);

// Polymatroid whose rank is the support function r(S) = max_x x(S) of the
// given vectors.  Throws NotAPolymatroidBaseSet unless the integer bases of
// the result are exactly the input set.
Polymatroid from_bases(std::span<const BaseVector> vectors);

// Ground set of b is shifted past a's.
Polymatroid direct_sum(const Polymatroid& a, const Polymatroid& b);

// r*(S) = s|S| + r(E\S) - r(E); requires s >= max singleton rank.
Polymatroid s_dual(const Polymatroid& m, int s);

Polymatroid scale_rank(const Polymatroid& m, int k);

// r(C) = |C|-1 = r(E)-1, C is closed, and C is minimally dependent.
bool is_circuit_hyperplane(const Polymatroid& m, Subset c);
std::vector<Subset> circuit_hyperplanes(const Polymatroid& m);

// Adds C to the bases of m (only r(C) changes, to |C|).
Polymatroid relax_circuit_hyperplane(const Polymatroid& m, Subset c);

// M plus a new last element that is a loop / coloop.
Polymatroid add_loop(const Polymatroid& m);
Polymatroid add_coloop(const Polymatroid& m);

}  // namespace tuttice

#endif  // TUTTICE_POLYMATROID_HPP_
