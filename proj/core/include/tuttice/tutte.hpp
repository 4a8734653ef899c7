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

#ifndef TUTTICE_TUTTE_HPP_
#define TUTTICE_TUTTE_HPP_

#include <optional>

#include "tuttice/bivar_poly.hpp"
#include "tuttice/polymatroid.hpp"
#include "tuttice/qpoly.hpp"

namespace tuttice {

// Corank-nullity expansion sum_S (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}.
// Throws NotAMatroid: for polymatroids the sum is not a polynomial.
BivarPoly tutte_corank_nullity(const Polymatroid& m);

// Tutte polynomial of a matroid on n elements of rank r from its Q':
//   T = -(xy-x-y)^{n-1} / ((-y)^{r-1} (-x)^{n-r-1})
//       * Q'(-x/(xy-x-y), -y/(xy-x-y)).
// Throws InexactDivision if the rational expression is not a polynomial.
BivarPoly tutte_from_qprime(int n, int r, const BivarPoly& q);

// Q' = x^{n-r} y^r / (x+y-1) * T((x+y-1)/y, (x+y-1)/x).
BivarPoly qprime_from_tutte(int n, int r, const BivarPoly& tutte);

// Convenience: x^i y^j coefficient (0 when absent).
Integer coefficient(const BivarPoly& p, int i, int j);

// Coefficientwise comparison, up to total order N in (v, w), of
//   sum_{t,u} Q(t,u) v^t w^u
// against
//   T((1-vw)/(1-v), (1-vw)/(1-w)) / ((1-v)^{n-r} (1-w)^r (1-vw)),
// with Q counted directly and the right side expanded as an exact power
// series.
struct SeriesMismatch {
  int t;
  int u;
  Integer lattice_side;
  Integer tutte_side;
};

struct SeriesReport {
  int order = 0;
  int coefficients_compared = 0;
  std::optional<SeriesMismatch> first_mismatch;

  bool matches() const { return !first_mismatch.has_value(); }
};

SeriesReport series_identity_check(const Polymatroid& m, int order);

// Truncated power-series expansion of the closed form above (exposed for
// tests and the CLI).
BivarPoly tutte_series_expansion(int n, int r, const BivarPoly& tutte,
                                 int order);

// Numerical evaluation of T(x, y) from lattice counts alone:
//   T = (-(xy-x-y))^{n+1} / (x^{n-r} y^r)
//       * sum_{t,u>=0} Q(t,u) (y(x-1)/x)^t (x(y-1)/y)^u,
// summed for t, u < terms.  Requires both ratios to lie in (-1, 1);
// otherwise throws InvalidParams.
long double tutte_via_lattice_series(const BinomialForm& q, int n, int r,
                                     long double x, long double y,
                                     int terms = 400);

}  // namespace tuttice

#endif  // TUTTICE_TUTTE_HPP_
