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

#include "tuttice/tutte.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tuttice/error.hpp"
#include "tuttice/lattice.hpp"

namespace tuttice {
namespace {

void check_shape(int n, int r) {
  if (n < 1 || r < 0 || r > n) {
    throw Error(ErrorCode::kInvalidParams,
                "need n >= 1 and 0 <= r <= n (got n=" + std::to_string(n) +
                    ", r=" + std::to_string(r) + ")");
  }
}

// Multiplies num or den by base^exponent depending on the sign.
void apply_signed_power(BivarPoly& num, BivarPoly& den, const BivarPoly& base,
                        int exponent) {
  if (exponent >= 0) {
    den *= pow(base, exponent);
  } else {
    num *= pow(base, -exponent);
  }
}

BivarPoly exact_or_throw(const BivarPoly& num, const BivarPoly& den,
                         const char* what) {
  std::optional<BivarPoly> q = divide_exact(num, den);
  if (!q) {
    throw Error(ErrorCode::kInexactDivision,
                std::string(what) + " leaves a nonzero remainder");
  }
  return *std::move(q);
}

// Inverse of a power series with constant term 1, truncated at order.
BivarPoly series_inverse(const BivarPoly& f, int order) {
  const BivarPoly g = BivarPoly(1) - f;  // no constant term
  BivarPoly sum(1);
  BivarPoly power(1);
  for (int k = 1; k <= order; ++k) {
    power = (power * g).truncated(order);
    sum += power;
  }
  return sum;
}

BivarPoly series_power(const BivarPoly& f, int exponent, int order) {
  const BivarPoly base = exponent >= 0 ? f : series_inverse(f, order);
  BivarPoly out(1);
  for (int k = 0; k < std::abs(exponent); ++k) out = (out * base).truncated(order);
  return out;
}

}  // namespace

BivarPoly tutte_corank_nullity(const Polymatroid& m) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid,
                "corank-nullity polynomial needs a matroid");
  }
  const int n = m.size();
  // tally[a][b] = #{S : corank a, nullity b}
  std::vector<std::vector<Integer>> tally(n + 1, std::vector<Integer>(n + 1));
  for (Subset s = 0; s <= m.ground(); ++s) {
    tally[m.rank() - m.rank(s)][cardinality(s) - m.rank(s)] += 1;
  }
  const BivarPoly xm = BivarPoly::x() - BivarPoly(1);
  const BivarPoly ym = BivarPoly::y() - BivarPoly(1);
  BivarPoly out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (tally[a][b] != 0) out += BivarPoly(tally[a][b]) * pow(xm, a) * pow(ym, b);
    }
  }
  return out;
}

BivarPoly tutte_from_qprime(int n, int r, const BivarPoly& q) {
  check_shape(n, r);
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const BivarPoly w = x * y - x - y;
  const int degree = std::max(q.total_degree(), 0);
  // q(-x/w, -y/w) * w^degree
  BivarPoly num;
  for (const auto& [e, c] : q.terms()) {
    num += BivarPoly(c) * pow(-x, e.i) * pow(-y, e.j) *
           pow(w, degree - e.i - e.j);
  }
  BivarPoly den(1);
  apply_signed_power(num, den, w, degree - (n - 1));
  num = -num;
  apply_signed_power(num, den, -y, r - 1);
  apply_signed_power(num, den, -x, n - r - 1);
  return exact_or_throw(num, den, "Tutte conversion");
}

BivarPoly qprime_from_tutte(int n, int r, const BivarPoly& tutte) {
  check_shape(n, r);
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const BivarPoly l = x + y - BivarPoly(1);
  const int dx = std::max(tutte.degree_x(), 0);
  const int dy = std::max(tutte.degree_y(), 0);
  // T(l/y, l/x) * y^dx * x^dy
  BivarPoly num;
  for (const auto& [e, c] : tutte.terms()) {
    num += BivarPoly(c) * pow(l, e.i + e.j) * pow(y, dx - e.i) *
           pow(x, dy - e.j);
  }
  num *= pow(x, n - r) * pow(y, r);
  const BivarPoly den = l * pow(y, dx) * pow(x, dy);
  return exact_or_throw(num, den, "Q' conversion");
}

Integer coefficient(const BivarPoly& p, int i, int j) {
  return p.coefficient(i, j);
}

BivarPoly tutte_series_expansion(int n, int r, const BivarPoly& tutte,
                                 int order) {
  check_shape(n, r);
  // Variables: x plays v, y plays w.
  const BivarPoly one(1);
  const BivarPoly one_v = one - BivarPoly::x();
  const BivarPoly one_w = one - BivarPoly::y();
  const BivarPoly one_vw = one - BivarPoly::x() * BivarPoly::y();
  // sum_ij b_ij (1-vw)^{i+j-1} (1-v)^{-(n-r)-i} (1-w)^{-r-j}
  BivarPoly out;
  for (const auto& [e, c] : tutte.terms()) {
    BivarPoly term = series_power(one_vw, e.i + e.j - 1, order);
    term = (term * series_power(one_v, -(n - r) - e.i, order)).truncated(order);
    term = (term * series_power(one_w, -r - e.j, order)).truncated(order);
    out += BivarPoly(c) * term;
  }
  return out;
}

SeriesReport series_identity_check(const Polymatroid& m, int order) {
  if (order < 0) throw Error(ErrorCode::kInvalidParams, "order must be >= 0");
  const BivarPoly tutte = tutte_corank_nullity(m);
  const BivarPoly expansion =
      tutte_series_expansion(m.size(), m.rank(), tutte, order);
  SeriesReport report;
  report.order = order;
  for (int total = 0; total <= order; ++total) {
    for (int t = 0; t <= total; ++t) {
      const int u = total - t;
      const Integer lattice = count_lattice_points(m, t, u);
      const Integer closed = expansion.coefficient(t, u);
      ++report.coefficients_compared;
      if (lattice != closed && !report.first_mismatch) {
        report.first_mismatch = SeriesMismatch{t, u, lattice, closed};
      }
    }
  }
  return report;
}

long double tutte_via_lattice_series(const BinomialForm& q, int n, int r,
                                     long double x, long double y, int terms) {
  check_shape(n, r);
  if (x == 0 || y == 0) {
    throw Error(ErrorCode::kInvalidParams, "x and y must be nonzero");
  }
  const long double v = y * (x - 1) / x;
  const long double w = x * (y - 1) / y;
  if (std::fabs(v) >= 1 || std::fabs(w) >= 1) {
    throw Error(ErrorCode::kInvalidParams,
                "lattice series diverges at this point");
  }
  const int degree = std::max(q.total_degree(), 0);
  // choose[k][i] = binom(k, i) for i <= degree
  std::vector<std::vector<long double>> choose(
      terms, std::vector<long double>(degree + 1, 0));
  for (int k = 0; k < terms; ++k) {
    choose[k][0] = 1;
    for (int i = 1; i <= degree && i <= k; ++i) {
      choose[k][i] = choose[k - 1][i - 1] + (i <= k - 1 ? choose[k - 1][i] : 0);
    }
  }
  std::vector<std::pair<Exponent, long double>> coeffs;
  for (const auto& [e, c] : q.coefficients()) {
    coeffs.emplace_back(e, c.convert_to<long double>());
  }
  long double sum = 0;
  long double vt = 1;
  for (int t = 0; t < terms; ++t) {
    long double wu = 1;
    for (int u = 0; u < terms; ++u) {
      long double value = 0;
      for (const auto& [e, c] : coeffs) value += c * choose[t][e.i] * choose[u][e.j];
      sum += value * vt * wu;
      wu *= w;
    }
    vt *= v;
  }
  const long double minus_w = -(x * y - x - y);
  return std::pow(minus_w, n + 1) / (std::pow(x, n - r) * std::pow(y, r)) * sum;
}

}  // namespace tuttice
