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

#ifndef TUTTICE_BIVAR_POLY_HPP_
#define TUTTICE_BIVAR_POLY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace tuttice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent pair (i, j) of x^i y^j.
struct Exponent {
  int i = 0;
  int j = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Graded order: total degree first, then x-degree.  The leading term of a
// polynomial is the greatest exponent under this order.
struct GradedLess {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    const int da = a.i + a.j;
    const int db = b.i + b.j;
    return da != db ? da < db : a.i < b.i;
  }
};

// Polynomial in Z[x, y] with nonnegative exponents.  Zero coefficients are
// never stored.
class BivarPoly {
 public:
  using Terms = std::map<Exponent, Integer, GradedLess>;

  BivarPoly() = default;
  BivarPoly(long long c);  // NOLINT: integers promote to constants.
  explicit BivarPoly(Integer c);

  static BivarPoly monomial(Integer c, int i, int j);
  static BivarPoly x() { return monomial(1, 1, 0); }
  static BivarPoly y() { return monomial(1, 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(int i, int j) const;
  void add_term(int i, int j, const Integer& c);

  int degree_x() const;
  int degree_y() const;
  int total_degree() const;  // -1 for zero
  Exponent leading_exponent() const;

  BivarPoly swapped() const;  // p(y, x)
  // Keeps terms of total degree <= order.
  BivarPoly truncated(int order) const;
  // Homogeneous part of the given total degree.
  BivarPoly homogeneous_part(int degree) const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  long double evaluate(long double x, long double y) const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const BivarPoly& other);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

BivarPoly pow(const BivarPoly& base, int exponent);

// Quotient q with dividend = q * divisor, or nullopt when the remainder of
// graded division is nonzero (including non-integral coefficients).
std::optional<BivarPoly> divide_exact(const BivarPoly& dividend,
                                      const BivarPoly& divisor);

// Descending total degree, then descending x-degree; "x^2 + 2xy + y^2 - x - y".
std::string to_pretty(const BivarPoly& p, std::string_view x_name = "x",
                      std::string_view y_name = "y");

}  // namespace tuttice

#endif  // TUTTICE_BIVAR_POLY_HPP_
