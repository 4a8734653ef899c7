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

#ifndef TUTTICE_QPOLY_HPP_
#define TUTTICE_QPOLY_HPP_

#include <map>

#include "tuttice/bivar_poly.hpp"
#include "tuttice/lattice.hpp"
#include "tuttice/polymatroid.hpp"

namespace tuttice {

// Q(t,u) = sum c_ij * binom(t, i) * binom(u, j); stored as exponent pairs
// (i, j) -> c_ij with zero coefficients omitted.
class BinomialForm {
 public:
  using Coefficients = std::map<Exponent, Integer, GradedLess>;

  BinomialForm() = default;
  explicit BinomialForm(Coefficients coeffs);

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(int i, int j) const;
  int total_degree() const;

  // Exact value sum c_ij binom(t,i) binom(u,j) for any t, u >= 0.
  Integer evaluate(int t, int u) const;

  friend bool operator==(const BinomialForm&, const BinomialForm&) = default;

 private:
  Coefficients coeffs_;
};

// c_ij = (forward difference in t)^i (forward difference in u)^j of Q at
// the origin, for every (i, j) the grid supports.  When degree_bound >= 0,
// any nonzero c_ij with i + j > degree_bound raises DegreeExceeded.  The
// reconstruction is checked against every grid entry.
BinomialForm interpolate_binomial(const CountGrid& grid, int degree_bound = -1);

// Q'(x, y) = sum c_ij (x-1)^i (y-1)^j.
BivarPoly to_qprime(const BinomialForm& form);

// Binomial form of Q from the counts on the triangle t + u <= n-1.
BinomialForm binomial_form(const Polymatroid& m);

// Binomial form from the full n x n grid, enforcing the |E|-1 degree bound.
BinomialForm binomial_form_checked(const Polymatroid& m);

BivarPoly qprime(const Polymatroid& m);

}  // namespace tuttice

#endif  // TUTTICE_QPOLY_HPP_
