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

#include "tuttice/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tuttice/error.hpp"

namespace tuttice {
namespace {

// Rank of the columns in `cols` of a matrix over GF(p), by elimination.
int column_rank(std::vector<std::vector<int>> rows, Subset cols, int p) {
  const int n_rows = static_cast<int>(rows.size());
  int rank = 0;
  for (int c : elements_of(cols)) {
    int pivot = -1;
    for (int i = rank; i < n_rows; ++i) {
      if (rows[i][c] % p != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    int inv = 1;
    while ((rows[rank][c] * inv) % p != 1) ++inv;
    for (int& v : rows[rank]) v = (v * inv) % p;
    for (int i = 0; i < n_rows; ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        rows[i][k] = ((rows[i][k] - f * rows[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<int> matrix_rank_table(const std::vector<std::vector<int>>& rows,
                                   int n, int p) {
  std::vector<int> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) table[s] = column_rank(rows, s, p);
  return table;
}

std::vector<int> sparse_paving_table(int n, int r, std::mt19937& rng) {
  std::vector<Subset> candidates;
  for (Subset s = 0; s <= full_set(n); ++s) {
    if (cardinality(s) == r) candidates.push_back(s);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const int wanted =
      std::uniform_int_distribution<int>(0, static_cast<int>(candidates.size()))(rng);
  std::vector<Subset> chosen;
  for (Subset c : candidates) {
    if (static_cast<int>(chosen.size()) >= wanted) break;
    const bool spread = std::all_of(chosen.begin(), chosen.end(), [&](Subset d) {
      return cardinality(c & d) <= r - 2;
    });
    if (spread) chosen.push_back(c);
  }
  std::vector<int> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = std::min(cardinality(s), r);
  }
  for (Subset c : chosen) table[c] = r - 1;
  return table;
}

bool connected(int vertices, const std::vector<std::pair<int, int>>& edges,
               Subset mask) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = vertices;
  for (int k : elements_of(mask)) {
    const int a = find(edges[k].first);
    const int b = find(edges[k].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Subset> flats(const Polymatroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    bool closed = true;
    for (int e = 0; e < m.size() && closed; ++e) {
      if (!contains(s, e) && m.rank(s | singleton(e)) == m.rank(s)) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

Subset closure(const Polymatroid& m, Subset s) {
  Subset out = s;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(s | singleton(e)) == m.rank(s)) out |= singleton(e);
  }
  return out;
}

}  // namespace

Polymatroid small_example() {
  return make_polymatroid(3, {0, 1, 1, 1, 0, 1, 1, 1});
}

Polymatroid doubled_small_example() { return scale_rank(small_example(), 2); }

std::vector<NamedPolymatroid> uniform_corpus(int max_n) {
  std::vector<NamedPolymatroid> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(n),
                     uniform_matroid(r, n)});
    }
  }
  return out;
}

std::vector<Graph> connected_graphs(int max_vertices) {
  std::vector<Graph> out;
  for (int v = 2; v <= max_vertices; ++v) {
    std::vector<std::pair<int, int>> all_edges;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) all_edges.emplace_back(a, b);
    }
    const int m = static_cast<int>(all_edges.size());
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> edge_maps;  // per permutation
    do {
      std::vector<int> map(m);
      for (int k = 0; k < m; ++k) {
        int a = perm[all_edges[k].first];
        int b = perm[all_edges[k].second];
        if (a > b) std::swap(a, b);
        map[k] = static_cast<int>(
            std::find(all_edges.begin(), all_edges.end(), std::make_pair(a, b)) -
            all_edges.begin());
      }
      edge_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Subset> classes;
    for (Subset mask = 1; mask <= full_set(m); ++mask) {
      if (!connected(v, all_edges, mask)) continue;
      Subset canonical = mask;
      for (const auto& map : edge_maps) {
        Subset image = 0;
        for (int k : elements_of(mask)) image |= singleton(map[k]);
        canonical = std::min(canonical, image);
      }
      if (canonical == mask) classes.push_back(mask);
    }
    std::stable_sort(classes.begin(), classes.end(), [](Subset a, Subset b) {
      return cardinality(a) < cardinality(b);
    });
    for (Subset mask : classes) {
      Graph g;
      g.vertices = v;
      for (int k : elements_of(mask)) {
        g.edges.emplace_back(all_edges[k].first + 1, all_edges[k].second + 1);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<NamedPolymatroid> graphic_corpus(int max_vertices) {
  std::vector<NamedPolymatroid> out;
  int index = 0;
  for (const Graph& g : connected_graphs(max_vertices)) {
    std::string name = "G" + std::to_string(index++) + ":";
    for (const auto& [a, b] : g.edges) {
      name += std::to_string(a) + std::to_string(b) + " ";
    }
    name.pop_back();
    out.push_back({std::move(name), graphic_matroid(g.vertices, g.edges)});
  }
  return out;
}

std::vector<NamedPolymatroid> random_matroid_corpus(int count, int max_n,
                                                    std::uint32_t seed) {
  static constexpr int kPrimes[] = {2, 3, 5};
  std::mt19937 rng(seed);
  std::vector<NamedPolymatroid> out;
  int attempt = 0;
  while (static_cast<int>(out.size()) < count) {
    ++attempt;
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    std::vector<int> table;
    std::string name;
    if (n >= 3 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      const int r = std::uniform_int_distribution<int>(2, n - 1)(rng);
      table = sparse_paving_table(n, r, rng);
      name = "paving";
    } else {
      const int p = kPrimes[std::uniform_int_distribution<int>(0, 2)(rng)];
      const int rows = std::uniform_int_distribution<int>(1, std::min(n, 4))(rng);
      std::uniform_int_distribution<int> entry(0, p - 1);
      std::vector<std::vector<int>> matrix(rows, std::vector<int>(n));
      for (auto& row : matrix) {
        for (int& v : row) v = entry(rng);
      }
      table = matrix_rank_table(matrix, n, p);
      name = "GF" + std::to_string(p);
    }
    try {
      Polymatroid m = make_polymatroid(n, std::move(table));
      if (!m.is_matroid()) continue;
      out.push_back({"R" + std::to_string(attempt) + ":" + name + ":n" +
                         std::to_string(n) + "r" + std::to_string(m.rank()),
                     std::move(m)});
    } catch (const Error&) {
      // Not a rank function; filtered out.
    }
  }
  return out;
}

std::vector<NamedPolymatroid> matroid_corpus() {
  std::vector<NamedPolymatroid> out = uniform_corpus();
  for (auto& entry : graphic_corpus()) out.push_back(std::move(entry));
  for (auto& entry : random_matroid_corpus()) out.push_back(std::move(entry));
  return out;
}

std::vector<NamedPolymatroid> limit_size(std::vector<NamedPolymatroid> corpus,
                                         int max_n) {
  std::erase_if(corpus, [&](const NamedPolymatroid& e) { return e.m.size() > max_n; });
  return corpus;
}

std::vector<Polymatroid> single_element_extensions(const Polymatroid& m) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid, "extensions need a matroid");
  }
  const int n = m.size();
  if (n + 1 > kMaxGroundSize) {
    throw Error(ErrorCode::kSizeCapExceeded, "extension exceeds the size cap");
  }
  const std::vector<Subset> fl = flats(m);
  const int f = static_cast<int>(fl.size());
  if (f > 20) {
    throw Error(ErrorCode::kSizeCapExceeded, "too many flats to enumerate cuts");
  }
  // above[a]: flats containing flat a, as a bitmask over flat indices.
  std::vector<std::uint32_t> above(f, 0);
  for (int a = 0; a < f; ++a) {
    for (int b = 0; b < f; ++b) {
      if (is_subset(fl[a], fl[b])) above[a] |= std::uint32_t{1} << b;
    }
  }
  std::vector<int> flat_index(std::size_t{1} << n, -1);
  for (int a = 0; a < f; ++a) flat_index[fl[a]] = a;

  std::vector<Polymatroid> out;
  std::set<std::vector<int>> seen;
  for (std::uint32_t cut = 0; cut < (std::uint32_t{1} << f); ++cut) {
    bool up_closed = true;
    for (int a = 0; a < f && up_closed; ++a) {
      if (((cut >> a) & 1U) && (cut & above[a]) != above[a]) up_closed = false;
    }
    if (!up_closed) continue;
    std::vector<int> table(std::size_t{1} << (n + 1));
    for (Subset s = 0; s <= m.ground(); ++s) {
      table[s] = m.rank(s);
      const bool in_cut = (cut >> flat_index[closure(m, s)]) & 1U;
      table[s | singleton(n)] = m.rank(s) + (in_cut ? 0 : 1);
    }
    if (seen.contains(table)) continue;
    try {
      Polymatroid ext = make_polymatroid(n + 1, table);
      if (!ext.is_matroid()) continue;
      seen.insert(std::move(table));
      out.push_back(std::move(ext));
    } catch (const Error&) {
      // Up-closed but not a modular cut.
    }
  }
  return out;
}

}  // namespace tuttice
