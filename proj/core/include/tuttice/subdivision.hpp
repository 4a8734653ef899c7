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

#ifndef TUTTICE_SUBDIVISION_HPP_
#define TUTTICE_SUBDIVISION_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tuttice/activity.hpp"
#include "tuttice/bivar_poly.hpp"
#include "tuttice/lattice.hpp"
#include "tuttice/polymatroid.hpp"

namespace tuttice {

// Index sets of a top-degree cell u*simplex_X + e_B + t*(-simplex_Y):
// X and Y cover the ground set and meet exactly in element 1 (bit 0).
struct OrderedPartition {
  Subset x = 0;
  Subset y = 0;

  friend bool operator==(const OrderedPartition&,
                         const OrderedPartition&) = default;
};

bool is_valid_partition(const OrderedPartition& p, int n);
// The partition with the given X (must contain element 1).
OrderedPartition partition_with_x(Subset x, int n);
// All 2^{n-1} partitions, ordered by X.
std::vector<OrderedPartition> ordered_partitions(int n);

// The unique basis B with no element of X externally inactive and no
// element of Y internally inactive.  Scans every basis; throws
// UniquenessViolation unless exactly one passes, NotAMatroid otherwise.
Subset top_degree_basis(const Polymatroid& m, const OrderedPartition& p,
                        const ElementOrder& order);
Subset top_degree_basis(const Polymatroid& m, const OrderedPartition& p);

// Vertex of P(M) selected by the lifting functional of the cell: the
// greedy maximum for weights ordered X\1 (descending) > 1 > Y\1 (ascending).
// Defined for every polymatroid.
BaseVector top_degree_vertex(const Polymatroid& m, const OrderedPartition& p);

struct TopDegreeFace {
  OrderedPartition partition;
  BaseVector vertex;
  Subset basis = 0;  // support of the vertex; meaningful for matroids
  int i = 0;         // dim of the simplex part, |X| - 1
  int j = 0;         // dim of the reflected simplex part, |Y| - 1
};

// Matroids only: one face per partition, basis from top_degree_basis.
std::vector<TopDegreeFace> top_degree_faces(const Polymatroid& m);
// Any polymatroid: vertex from top_degree_vertex.
std::vector<TopDegreeFace> lifted_top_degree_faces(const Polymatroid& m);

// Membership of a lattice point in u*simplex_X + vertex + t*(-simplex_Y).
bool face_contains(const TopDegreeFace& face, int t, int u,
                   std::span<const int> z);

// Intersection of the faces whose X runs over [lower, upper]; its simplex
// part is indexed by `lower` and its reflected part by (E \ upper) + 1.
struct PosetElement {
  Subset basis = 0;
  Subset lower = 0;
  Subset upper = 0;
  int i = 0;
  int j = 0;
  int cube = -1;
};

struct Cube {
  DawsonInterval interval;
  int dimension = 0;
  std::vector<int> vertices;  // indices into FacePoset::faces
};

struct FacePoset {
  int n = 0;
  std::vector<TopDegreeFace> faces;
  std::vector<PosetElement> elements;
  std::vector<Cube> cubes;
  bool cubes_match_dawson = false;
  std::string witness;

  // Geometric containment of element a in element b.
  bool contained_in(int a, int b) const;
  // Number of elements per monomial x^a y^b, where a is the dimension of
  // the reflected-simplex part (scaled by t) and b that of the simplex part
  // (scaled by u): element (i, j) counts towards x^j y^i.
  std::map<Exponent, long long, GradedLess> monomial_counts() const;
};

// Top-degree faces closed under intersection.  Elements are formed within
// each same-basis group; the grouping is then compared with the Dawson
// partition.  Throws NotAMatroid.
FacePoset face_poset(const Polymatroid& m);

struct CoefficientEntry {
  int i = 0;
  int j = 0;
  long long poset_count = 0;
  Integer coefficient;
  bool matches = false;
};

struct CoefficientReport {
  std::vector<CoefficientEntry> entries;

  bool ok() const;
};

// Compares monomial_counts() with the absolute coefficients of Q' and
// checks the sign (-1)^{(n-1)-(a+b)} of every nonzero coefficient x^a y^b.
CoefficientReport coefficient_check(const Polymatroid& m);

// True iff every nonzero coefficient of x^i y^j has sign (-1)^{(n-1)-(i+j)}.
bool sign_alternation_check(const BivarPoly& q, int n);

struct CoverageReport {
  int t = 0;
  int u = 0;
  Count points = 0;
  Count covered = 0;
  std::vector<std::vector<int>> uncovered;  // first few uncovered points

  bool complete() const { return covered == points; }
};

// Matroids use top_degree_faces, other polymatroids the lifted faces.
CoverageReport coverage_check(const Polymatroid& m, int t, int u);

struct IntersectionReport {
  long long pairs_checked = 0;
  long long violations = 0;
  std::string witness;

  bool ok() const { return violations == 0; }
};

// Two faces sharing a lattice point of the (t,u) sum must share a basis.
IntersectionReport shared_basis_check(const Polymatroid& m, int t, int u);

// If faces for X1, X2 share a point p, every face with
// X1 & X2 <= X3 <= X1 | X2 contains p and has the same basis.
IntersectionReport interpolation_check(const Polymatroid& m, int t, int u);

}  // namespace tuttice

#endif  // TUTTICE_SUBDIVISION_HPP_
