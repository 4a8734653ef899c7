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

#ifndef TUTTICE_LATTICE_HPP_
#define TUTTICE_LATTICE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tuttice/polymatroid.hpp"

namespace tuttice {

using Count = std::int64_t;

// All integer bases of m in lexicographic order.
std::vector<BaseVector> enumerate_bases(const Polymatroid& m);

// True when x is an integer base: x(E) = r(E) and x(S) <= r(S).
bool is_base(const Polymatroid& m, std::span<const int> x);

// Halfspace test for P(M) + u*simplex + t*(-simplex):
//   z(E) = r(E) + u - t  and  z(S) <= r(S) + u  for proper nonempty S.
bool in_minkowski_sum(const Polymatroid& m, int t, int u,
                      std::span<const int> z);

// Calls visit(z) once per lattice point of the Minkowski sum, in
// lexicographic order.
void for_each_lattice_point(
    const Polymatroid& m, int t, int u,
    const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> lattice_points(const Polymatroid& m, int t,
                                             int u);

// Number of lattice points of P(M) + u*simplex + t*(-simplex).  Throws
// CountOverflow if the count leaves int64.
Count count_lattice_points(const Polymatroid& m, int t, int u);

// z = base + sum(e_i for i in increments) - sum(e_j for j in decrements),
// with |increments| = u and |decrements| = t.  Indices are 0-based.
struct Decomposition {
  BaseVector base;
  std::vector<int> increments;
  std::vector<int> decrements;
};

std::optional<Decomposition> decompose_point(const Polymatroid& m, int t,
                                             int u, std::span<const int> z);

// Q(t,u) on a rectangle 0..t_max x 0..u_max, or on the triangle
// t + u <= t_max when built by count_triangle.
class CountGrid {
 public:
  CountGrid(int t_max, int u_max, bool triangular);

  int t_max() const noexcept { return t_max_; }
  int u_max() const noexcept { return u_max_; }
  bool triangular() const noexcept { return triangular_; }
  bool has(int t, int u) const noexcept;

  Count at(int t, int u) const;
  void set(int t, int u, Count value);

  // Rows indexed by t; entries outside a triangle are reported as -1.
  std::vector<std::vector<Count>> rows() const;

 private:
  int t_max_;
  int u_max_;
  bool triangular_;
  std::vector<Count> cells_;
};

CountGrid count_grid(const Polymatroid& m, int t_max, int u_max);
CountGrid count_triangle(const Polymatroid& m, int degree);

}  // namespace tuttice

#endif  // TUTTICE_LATTICE_HPP_
