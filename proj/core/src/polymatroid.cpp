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

#include "tuttice/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tuttice/error.hpp"
#include "tuttice/lattice.hpp"

namespace tuttice {
namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "ground set size " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxGroundSize));
  }
}

std::string pair_witness(Subset a, Subset b, int n) {
  return "X={" + subset_key(a, n) + "}, Y={" + subset_key(b, n) + "}";
}

}  // namespace

int Polymatroid::max_singleton_rank() const {
  int best = 0;
  for (int e = 0; e < n_; ++e) best = std::max(best, table_[singleton(e)]);
  return best;
}

Polymatroid make_polymatroid(int n, std::vector<int> table) {
  check_size(n);
  const std::size_t expected = std::size_t{1} << n;
  if (table.size() != expected) {
    throw Error(ErrorCode::kInvalidParams,
                "rank table has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  for (Subset s = 0; s < expected; ++s) {
    if (table[s] < 0) {
      throw Error(ErrorCode::kNegativeRank,
                  "r({" + subset_key(s, n) + "}) = " + std::to_string(table[s]));
    }
  }
  if (table[0] != 0) {
    throw Error(ErrorCode::kAxiomViolation,
                "P1: r(empty) = " + std::to_string(table[0]));
  }
  // Monotonicity and submodularity are both local: checking covering pairs
  // S < S+e and the diamonds S, S+a, S+b, S+a+b is sufficient.
  bool matroid = true;
  for (Subset s = 0; s < expected; ++s) {
    for (int a = 0; a < n; ++a) {
      if (contains(s, a)) continue;
      const Subset sa = s | singleton(a);
      const int step = table[sa] - table[s];
      if (step < 0) {
        throw Error(ErrorCode::kAxiomViolation,
                    "P2: r({" + subset_key(s, n) + "}) > r({" +
                        subset_key(sa, n) + "})");
      }
      if (step > 1) matroid = false;
      for (int b = a + 1; b < n; ++b) {
        if (contains(s, b)) continue;
        const Subset sb = s | singleton(b);
        if (table[sa | sb] + table[s] > table[sa] + table[sb]) {
          throw Error(ErrorCode::kAxiomViolation,
                      "P3: " + pair_witness(sa, sb, n));
        }
      }
    }
  }
  return Polymatroid(n, std::move(table), matroid);
}

Polymatroid uniform_matroid(int r, int n) {
  if (n < 1 || n > kMaxGroundSize || r < 0 || r > n) {
    throw Error(ErrorCode::kInvalidParams,
                "uniform matroid needs 0 <= r <= n, 1 <= n <= " +
                    std::to_string(kMaxGroundSize));
  }
  std::vector<int> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = std::min(cardinality(s), r);
  }
  return make_polymatroid(n, std::move(table));
}

Polymatroid graphic_matroid(int n_vertices,
                            std::span<const std::pair<int, int>> edges) {
  if (n_vertices < 1) {
    throw Error(ErrorCode::kInvalidParams, "graph needs at least one vertex");
  }
  const int m = static_cast<int>(edges.size());
  check_size(m);
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n_vertices || b < 1 || b > n_vertices) {
      throw Error(ErrorCode::kInvalidEdge,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside vertices 1.." + std::to_string(n_vertices));
    }
  }
  std::vector<int> table(std::size_t{1} << m);
  std::vector<int> parent(n_vertices);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Subset s = 0; s < table.size(); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int merged = 0;
    for (int e : elements_of(s)) {
      const int a = find(edges[e].first - 1);
      const int b = find(edges[e].second - 1);
      if (a != b) {
        parent[a] = b;
        ++merged;
      }
    }
    // n - #components = number of successful unions.
    table[s] = merged;
  }
  return make_polymatroid(m, std::move(table));
}

Polymatroid from_bases(std::span<const BaseVector> vectors) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kInvalidParams, "no base vectors given");
  }
  const int n = static_cast<int>(vectors.front().size());
  check_size(n);
  const int total = std::accumulate(vectors.front().begin(),
                                    vectors.front().end(), 0);
  for (const BaseVector& v : vectors) {
    if (static_cast<int>(v.size()) != n) {
      throw Error(ErrorCode::kInvalidParams, "base vectors differ in length");
    }
    if (std::any_of(v.begin(), v.end(), [](int c) { return c < 0; })) {
      throw Error(ErrorCode::kInvalidParams, "base vectors must be nonnegative");
    }
    if (std::accumulate(v.begin(), v.end(), 0) != total) {
      throw Error(ErrorCode::kInvalidParams,
                  "base vectors have different coordinate sums");
    }
  }
  std::vector<int> table(std::size_t{1} << n, 0);
  std::vector<int> sums(table.size());
  for (const BaseVector& v : vectors) {
    sums[0] = 0;
    for (Subset s = 1; s < table.size(); ++s) {
      const int low = std::countr_zero(s);
      sums[s] = sums[s & (s - 1)] + v[low];
      table[s] = std::max(table[s], sums[s]);
    }
  }
  Polymatroid m = [&] {
    try {
      return make_polymatroid(n, table);
    } catch (const Error& e) {
      throw Error(ErrorCode::kNotAPolymatroidBaseSet,
                  std::string("rank envelope is not a polymatroid (") +
                      e.what() + ")");
    }
  }();
  std::vector<BaseVector> wanted(vectors.begin(), vectors.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  const std::vector<BaseVector> got = enumerate_bases(m);
  if (got != wanted) {
    throw Error(ErrorCode::kNotAPolymatroidBaseSet,
                "rank envelope has " + std::to_string(got.size()) +
                    " integer bases, input lists " +
                    std::to_string(wanted.size()));
  }
  return m;
}

Polymatroid direct_sum(const Polymatroid& a, const Polymatroid& b) {
  const int n1 = a.size();
  const int n = n1 + b.size();
  check_size(n);
  std::vector<int> table(std::size_t{1} << n);
  const Subset low = a.ground();
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = a.rank(s & low) + b.rank(s >> n1);
  }
  return make_polymatroid(n, std::move(table));
}

Polymatroid s_dual(const Polymatroid& m, int s) {
  if (s < m.max_singleton_rank()) {
    throw Error(ErrorCode::kSTooSmall,
                "s = " + std::to_string(s) + " below max singleton rank " +
                    std::to_string(m.max_singleton_rank()));
  }
  const Subset e = m.ground();
  std::vector<int> table(std::size_t{1} << m.size());
  for (Subset x = 0; x < table.size(); ++x) {
    const Subset rest = e & ~x;
    table[x] = s * cardinality(x) + m.rank(rest) - m.rank();
  }
  return make_polymatroid(m.size(), std::move(table));
}

Polymatroid scale_rank(const Polymatroid& m, int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidParams, "scale factor must be positive");
  }
  std::vector<int> table(m.table().begin(), m.table().end());
  for (int& v : table) v *= k;
  return make_polymatroid(m.size(), std::move(table));
}

bool is_circuit_hyperplane(const Polymatroid& m, Subset c) {
  if (!m.is_matroid() || !is_subset(c, m.ground())) return false;
  const int size = cardinality(c);
  if (m.rank(c) != size - 1 || m.rank(c) != m.rank() - 1) return false;
  for (int e = 0; e < m.size(); ++e) {
    if (contains(c, e)) {
      if (m.rank(c & ~singleton(e)) != size - 1) return false;
    } else if (m.rank(c | singleton(e)) == m.rank(c)) {
      return false;
    }
  }
  return true;
}

std::vector<Subset> circuit_hyperplanes(const Polymatroid& m) {
  std::vector<Subset> out;
  if (!m.is_matroid()) return out;
  for (Subset c = 0; c <= m.ground(); ++c) {
    if (is_circuit_hyperplane(m, c)) out.push_back(c);
  }
  return out;
}

Polymatroid relax_circuit_hyperplane(const Polymatroid& m, Subset c) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid, "relaxation needs a matroid");
  }
  if (!is_circuit_hyperplane(m, c)) {
    throw Error(ErrorCode::kNotACircuitHyperplane,
                "{" + subset_key(c, m.size()) + "} is not a circuit-hyperplane");
  }
  std::vector<int> table(m.table().begin(), m.table().end());
  table[c] = cardinality(c);
  return make_polymatroid(m.size(), std::move(table));
}

Polymatroid add_loop(const Polymatroid& m) {
  return direct_sum(m, uniform_matroid(0, 1));
}

Polymatroid add_coloop(const Polymatroid& m) {
  return direct_sum(m, uniform_matroid(1, 1));
}

}  // namespace tuttice
