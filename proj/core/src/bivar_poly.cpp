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

#include "tuttice/bivar_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tuttice {

BivarPoly::BivarPoly(long long c) : BivarPoly(Integer(c)) {}

BivarPoly::BivarPoly(Integer c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, std::move(c));
}

BivarPoly BivarPoly::monomial(Integer c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BivarPoly p;
  p.add_term(i, j, c);
  return p;
}

Integer BivarPoly::coefficient(int i, int j) const {
  const auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivarPoly::add_term(int i, int j, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.i);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.j);
  return d;
}

int BivarPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponent& e = terms_.rbegin()->first;
  return e.i + e.j;
}

Exponent BivarPoly::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.j, e.i}, c);
  return out;
}

BivarPoly BivarPoly::truncated(int order) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.i + e.j <= order) out.terms_.emplace(e, c);
  }
  return out;
}

BivarPoly BivarPoly::homogeneous_part(int degree) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.i + e.j == degree) out.terms_.emplace(e, c);
  }
  return out;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& y) const {
  const auto power = [](const Rational& base, int k) {
    Rational out = 1;
    for (int step = 0; step < k; ++step) out *= base;
    return out;
  };
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += Rational(c) * power(x, e.i) * power(y, e.j);
  }
  return sum;
}

long double BivarPoly::evaluate(long double x, long double y) const {
  long double sum = 0;
  for (const auto& [e, c] : terms_) {
    long double term = c.convert_to<long double>();
    for (int k = 0; k < e.i; ++k) term *= x;
    for (int k = 0; k < e.j; ++k) term *= y;
    sum += term;
  }
  return sum;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.i, e.j, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.i, e.j, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& other) {
  *this = *this * other;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
    }
  }
  return out;
}

BivarPoly operator-(const BivarPoly& a) {
  BivarPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivarPoly pow(const BivarPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative power");
  BivarPoly result(1);
  BivarPoly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

std::optional<BivarPoly> divide_exact(const BivarPoly& dividend,
                                      const BivarPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const Exponent lead = divisor.leading_exponent();
  const Integer lead_coeff = divisor.coefficient(lead.i, lead.j);
  BivarPoly rest = dividend;
  BivarPoly quotient;
  while (!rest.is_zero()) {
    const Exponent top = rest.leading_exponent();
    if (top.i < lead.i || top.j < lead.j) return std::nullopt;
    const Integer top_coeff = rest.coefficient(top.i, top.j);
    if (top_coeff % lead_coeff != 0) return std::nullopt;
    const BivarPoly step = BivarPoly::monomial(top_coeff / lead_coeff,
                                               top.i - lead.i, top.j - lead.j);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

namespace {

void append_power(std::string& out, std::string_view name, int power) {
  if (power == 0) return;
  out += name;
  if (power > 1) out += "^" + std::to_string(power);
}

}  // namespace

std::string to_pretty(const BivarPoly& p, std::string_view x_name,
                      std::string_view y_name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = e.i == 0 && e.j == 0;
    if (magnitude != 1 || constant) out += magnitude.str();
    append_power(out, x_name, e.i);
    append_power(out, y_name, e.j);
  }
  return out;
}

}  // namespace tuttice
