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

#include "tuttice/qpoly.hpp"

#include <string>
#include <vector>

#include "tuttice/error.hpp"

namespace tuttice {
namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace

BinomialForm::BinomialForm(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Integer BinomialForm::coefficient(int i, int j) const {
  const auto it = coeffs_.find(Exponent{i, j});
  return it == coeffs_.end() ? Integer(0) : it->second;
}

int BinomialForm::total_degree() const {
  if (coeffs_.empty()) return -1;
  const Exponent& e = coeffs_.rbegin()->first;
  return e.i + e.j;
}

Integer BinomialForm::evaluate(int t, int u) const {
  Integer sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c * binomial(t, e.i) * binomial(u, e.j);
  return sum;
}

BinomialForm interpolate_binomial(const CountGrid& grid, int degree_bound) {
  // Differences are taken in place, first along u then along t; cells the
  // grid lacks stay unused because a triangle is closed under both steps.
  const int rows = grid.t_max() + 1;
  const int cols = grid.u_max() + 1;
  std::vector<std::vector<Integer>> d(rows, std::vector<Integer>(cols));
  for (int t = 0; t < rows; ++t) {
    for (int u = 0; u < cols; ++u) {
      if (grid.has(t, u)) d[t][u] = grid.at(t, u);
    }
  }
  for (int t = 0; t < rows; ++t) {
    for (int level = 1; level < cols; ++level) {
      for (int u = cols - 1; u >= level; --u) {
        if (grid.has(t, u)) d[t][u] -= d[t][u - 1];
      }
    }
  }
  for (int u = 0; u < cols; ++u) {
    for (int level = 1; level < rows; ++level) {
      for (int t = rows - 1; t >= level; --t) {
        if (grid.has(t, u)) d[t][u] -= d[t - 1][u];
      }
    }
  }
  BinomialForm::Coefficients coeffs;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (!grid.has(i, j) || d[i][j] == 0) continue;
      if (degree_bound >= 0 && i + j > degree_bound) {
        throw Error(ErrorCode::kDegreeExceeded,
                    "c_" + std::to_string(i) + std::to_string(j) + " = " +
                        d[i][j].str() + " beyond degree " +
                        std::to_string(degree_bound));
      }
      coeffs.emplace(Exponent{i, j}, d[i][j]);
    }
  }
  BinomialForm form(std::move(coeffs));
  for (int t = 0; t < rows; ++t) {
    for (int u = 0; u < cols; ++u) {
      if (grid.has(t, u) && form.evaluate(t, u) != grid.at(t, u)) {
        throw Error(ErrorCode::kDegreeExceeded,
                    "binomial form does not reproduce Q(" + std::to_string(t) +
                        "," + std::to_string(u) + ")");
      }
    }
  }
  return form;
}

BivarPoly to_qprime(const BinomialForm& form) {
  const BivarPoly x_shift = BivarPoly::x() - BivarPoly(1);
  const BivarPoly y_shift = BivarPoly::y() - BivarPoly(1);
  BivarPoly out;
  for (const auto& [e, c] : form.coefficients()) {
    out += BivarPoly(c) * pow(x_shift, e.i) * pow(y_shift, e.j);
  }
  return out;
}

BinomialForm binomial_form(const Polymatroid& m) {
  return interpolate_binomial(count_triangle(m, m.size() - 1));
}

BinomialForm binomial_form_checked(const Polymatroid& m) {
  const int n = m.size();
  return interpolate_binomial(count_grid(m, n - 1, n - 1), n - 1);
}

BivarPoly qprime(const Polymatroid& m) { return to_qprime(binomial_form(m)); }

}  // namespace tuttice
