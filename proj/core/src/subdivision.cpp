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

#include "tuttice/subdivision.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tuttice/error.hpp"
#include "tuttice/qpoly.hpp"

namespace tuttice {
namespace {

constexpr Subset kFirst = 1;  // element 1

int sign_for(int n, int i, int j) { return ((n - 1 - (i + j)) % 2 == 0) ? 1 : -1; }

std::string face_text(const TopDegreeFace& f, int n) {
  return "X={" + subset_key(f.partition.x, n) + "}, Y={" +
         subset_key(f.partition.y, n) + "}";
}

std::string point_text(std::span<const int> z) {
  std::string s = "(";
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(z[k]);
  }
  return s + ")";
}

TopDegreeFace make_face(const OrderedPartition& p, BaseVector vertex) {
  TopDegreeFace f;
  f.partition = p;
  f.basis = 0;
  for (std::size_t k = 0; k < vertex.size(); ++k) {
    if (vertex[k] != 0) f.basis |= singleton(static_cast<int>(k));
  }
  f.vertex = std::move(vertex);
  f.i = cardinality(p.x) - 1;
  f.j = cardinality(p.y) - 1;
  return f;
}

// Elements of each basis that are inactive under a fixed order.
struct InactiveSets {
  Subset basis = 0;
  Subset internal = 0;  // in B, not internally active
  Subset external = 0;  // outside B, not externally active
};

std::vector<InactiveSets> inactive_sets(const Polymatroid& m,
                                        const ElementOrder& order) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid, "top-degree faces need a matroid");
  }
  std::vector<InactiveSets> out;
  for (Subset b : matroid_bases(m)) {
    const ClassicActivities act = classic_activities(m, b, order);
    out.push_back({b, b & ~act.internal, m.ground() & ~b & ~act.external});
  }
  return out;
}

// The basis with no element of X externally inactive and no element of Y
// internally inactive, found by scanning all bases.
Subset unique_passing_basis(const std::vector<InactiveSets>& sets,
                            const OrderedPartition& p, int n) {
  int passing = 0;
  Subset found = 0;
  for (const InactiveSets& s : sets) {
    if ((p.x & s.external) == 0 && (p.y & s.internal) == 0) {
      ++passing;
      found = s.basis;
    }
  }
  if (passing != 1) {
    throw Error(ErrorCode::kUniquenessViolation,
                std::to_string(passing) + " bases pass for X={" +
                    subset_key(p.x, n) + "}, Y={" + subset_key(p.y, n) + "}");
  }
  return found;
}

// Faces are indexed by X >> 1.
int face_index(Subset x) { return static_cast<int>(x >> 1); }

}  // namespace

bool is_valid_partition(const OrderedPartition& p, int n) {
  return (p.x | p.y) == full_set(n) && (p.x & p.y) == kFirst;
}

OrderedPartition partition_with_x(Subset x, int n) {
  OrderedPartition p{x, (full_set(n) & ~x) | kFirst};
  if (!is_valid_partition(p, n)) {
    throw Error(ErrorCode::kInvalidParams,
                "X={" + subset_key(x, n) + "} must contain element 1");
  }
  return p;
}

std::vector<OrderedPartition> ordered_partitions(int n) {
  std::vector<OrderedPartition> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (Subset rest = 0; rest < (Subset{1} << (n - 1)); ++rest) {
    out.push_back(partition_with_x((rest << 1) | kFirst, n));
  }
  return out;
}

Subset top_degree_basis(const Polymatroid& m, const OrderedPartition& p,
                        const ElementOrder& order) {
  if (!is_valid_partition(p, m.size())) {
    throw Error(ErrorCode::kInvalidParams, "invalid ordered partition");
  }
  return unique_passing_basis(inactive_sets(m, order), p, m.size());
}

Subset top_degree_basis(const Polymatroid& m, const OrderedPartition& p) {
  return top_degree_basis(m, p, ElementOrder::natural(m.size()));
}

BaseVector top_degree_vertex(const Polymatroid& m, const OrderedPartition& p) {
  const int n = m.size();
  if (!is_valid_partition(p, n)) {
    throw Error(ErrorCode::kInvalidParams, "invalid ordered partition");
  }
  std::vector<int> greedy;
  for (int e = n - 1; e >= 1; --e) {
    if (contains(p.x, e)) greedy.push_back(e);
  }
  greedy.push_back(0);
  for (int e = 1; e < n; ++e) {
    if (!contains(p.x, e)) greedy.push_back(e);
  }
  BaseVector vertex(n, 0);
  Subset taken = 0;
  for (int e : greedy) {
    vertex[e] = m.rank(taken | singleton(e)) - m.rank(taken);
    taken |= singleton(e);
  }
  return vertex;
}

std::vector<TopDegreeFace> top_degree_faces(const Polymatroid& m) {
  // Scanning the activity condition per partition is equivalent to looking
  // X up in the natural-order Dawson intervals; the scan is kept literal.
  const int n = m.size();
  const std::vector<InactiveSets> sets =
      inactive_sets(m, ElementOrder::natural(n));
  std::vector<TopDegreeFace> out;
  for (const OrderedPartition& p : ordered_partitions(n)) {
    const Subset b = unique_passing_basis(sets, p, n);
    BaseVector vertex(n, 0);
    for (int e : elements_of(b)) vertex[e] = 1;
    out.push_back(make_face(p, std::move(vertex)));
  }
  return out;
}

std::vector<TopDegreeFace> lifted_top_degree_faces(const Polymatroid& m) {
  std::vector<TopDegreeFace> out;
  for (const OrderedPartition& p : ordered_partitions(m.size())) {
    out.push_back(make_face(p, top_degree_vertex(m, p)));
  }
  return out;
}

bool face_contains(const TopDegreeFace& face, int t, int u,
                   std::span<const int> z) {
  const int n = static_cast<int>(face.vertex.size());
  if (static_cast<int>(z.size()) != n) return false;
  long long into_x = 0;
  long long into_y = 0;
  for (int k = 1; k < n; ++k) {
    const int w = z[k] - face.vertex[k];
    if (contains(face.partition.x, k)) {
      if (w < 0) return false;
      into_x += w;
    } else {
      if (w > 0) return false;
      into_y += w;
    }
  }
  const long long simplex_at_first = u - into_x;
  const long long reflected_at_first = t + into_y;
  return simplex_at_first >= 0 && reflected_at_first >= 0 &&
         z[0] - face.vertex[0] == simplex_at_first - reflected_at_first;
}

bool FacePoset::contained_in(int a, int b) const {
  const PosetElement& ea = elements[a];
  const PosetElement& eb = elements[b];
  return ea.basis == eb.basis && is_subset(ea.lower, eb.lower) &&
         is_subset(eb.upper, ea.upper);
}

std::map<Exponent, long long, GradedLess> FacePoset::monomial_counts() const {
  std::map<Exponent, long long, GradedLess> out;
  for (const PosetElement& e : elements) ++out[Exponent{e.j, e.i}];
  return out;
}

FacePoset face_poset(const Polymatroid& m) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid, "face poset needs a matroid");
  }
  const int n = m.size();
  FacePoset poset;
  poset.n = n;
  poset.faces = top_degree_faces(m);

  // Close each same-basis group under pairwise intersection.  Faces from
  // different groups do not meet (checked separately by
  // shared_basis_check).
  std::map<Subset, std::vector<int>> groups;
  for (int k = 0; k < static_cast<int>(poset.faces.size()); ++k) {
    groups[poset.faces[k].basis].push_back(k);
  }
  std::map<Subset, std::set<std::pair<Subset, Subset>>> closed;
  for (const auto& [basis, members] : groups) {
    std::set<std::pair<Subset, Subset>>& cells = closed[basis];
    for (int k : members) cells.emplace(poset.faces[k].partition.x,
                                        poset.faces[k].partition.x);
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<std::pair<Subset, Subset>> snapshot(cells.begin(),
                                                            cells.end());
      for (std::size_t a = 0; a < snapshot.size(); ++a) {
        for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
          const std::pair<Subset, Subset> meet{
              snapshot[a].first & snapshot[b].first,
              snapshot[a].second | snapshot[b].second};
          if (cells.insert(meet).second) grew = true;
        }
      }
    }
  }

  poset.cubes_match_dawson = true;
  const std::vector<DawsonInterval> dawson = dawson_partition(m);
  std::map<Subset, int> cube_of_basis;
  for (const DawsonInterval& iv : dawson) {
    Cube cube;
    cube.interval = iv;
    cube.dimension = cardinality(iv.upper & ~(iv.lower | kFirst));
    if (!contains(iv.upper, 0)) {
      poset.cubes_match_dawson = false;
      poset.witness = "Dawson interval of basis {" + subset_key(iv.basis, n) +
                      "} misses element 1";
    }
    const auto group = groups.find(iv.basis);
    if (group != groups.end()) cube.vertices = group->second;
    // Vertices must be exactly the X in [lower, upper] that contain 1.
    std::set<Subset> expected;
    const Subset free = iv.upper & ~(iv.lower | kFirst);
    if (contains(iv.upper, 0)) {
      for (Subset f = free;; f = (f - 1) & free) {
        expected.insert(iv.lower | kFirst | f);
        if (f == 0) break;
      }
    }
    std::set<Subset> actual;
    for (int k : cube.vertices) actual.insert(poset.faces[k].partition.x);
    if (actual != expected && poset.cubes_match_dawson) {
      poset.cubes_match_dawson = false;
      poset.witness = "faces of basis {" + subset_key(iv.basis, n) +
                      "} do not form the Dawson cube";
    }
    cube_of_basis[iv.basis] = static_cast<int>(poset.cubes.size());
    poset.cubes.push_back(std::move(cube));
  }
  if (cube_of_basis.size() < groups.size() && poset.cubes_match_dawson) {
    poset.cubes_match_dawson = false;
    poset.witness = "a face basis has no Dawson interval";
  }

  for (const auto& [basis, cells] : closed) {
    const auto cube = cube_of_basis.find(basis);
    long long count = 0;
    for (const auto& [lower, upper] : cells) {
      PosetElement e;
      e.basis = basis;
      e.lower = lower;
      e.upper = upper;
      e.i = cardinality(lower) - 1;
      e.j = n - cardinality(upper);
      e.cube = cube == cube_of_basis.end() ? -1 : cube->second;
      poset.elements.push_back(e);
      ++count;
    }
    if (cube != cube_of_basis.end()) {
      long long expected = 1;
      for (int d = 0; d < poset.cubes[cube->second].dimension; ++d) expected *= 3;
      if (expected != count && poset.cubes_match_dawson) {
        poset.cubes_match_dawson = false;
        poset.witness = "cube of basis {" + subset_key(basis, n) + "} has " +
                        std::to_string(count) + " faces, expected " +
                        std::to_string(expected);
      }
    }
  }
  return poset;
}

bool CoefficientReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CoefficientEntry& e) { return e.matches; });
}

CoefficientReport coefficient_check(const Polymatroid& m) {
  const int n = m.size();
  const BivarPoly q = qprime(m);
  const FacePoset poset = face_poset(m);
  const auto counts = poset.monomial_counts();
  std::set<Exponent, GradedLess> keys;
  for (const auto& [e, c] : q.terms()) keys.insert(e);
  for (const auto& [e, c] : counts) keys.insert(e);
  CoefficientReport report;
  for (const Exponent& e : keys) {
    CoefficientEntry entry;
    entry.i = e.i;
    entry.j = e.j;
    const auto it = counts.find(e);
    entry.poset_count = it == counts.end() ? 0 : it->second;
    entry.coefficient = q.coefficient(e.i, e.j);
    const Integer magnitude = entry.coefficient < 0 ? Integer(-entry.coefficient)
                                                    : entry.coefficient;
    entry.matches = magnitude == entry.poset_count &&
                    (entry.coefficient == 0 ||
                     (entry.coefficient > 0) == (sign_for(n, e.i, e.j) > 0));
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool sign_alternation_check(const BivarPoly& q, int n) {
  for (const auto& [e, c] : q.terms()) {
    if ((c > 0) != (sign_for(n, e.i, e.j) > 0)) return false;
  }
  return true;
}

namespace {

std::vector<TopDegreeFace> faces_for(const Polymatroid& m) {
  return m.is_matroid() ? top_degree_faces(m) : lifted_top_degree_faces(m);
}

}  // namespace

CoverageReport coverage_check(const Polymatroid& m, int t, int u) {
  constexpr std::size_t kKeepUncovered = 32;
  const std::vector<TopDegreeFace> faces = faces_for(m);
  CoverageReport report;
  report.t = t;
  report.u = u;
  for_each_lattice_point(m, t, u, [&](std::span<const int> z) {
    ++report.points;
    const bool hit = std::any_of(faces.begin(), faces.end(), [&](const auto& f) {
      return face_contains(f, t, u, z);
    });
    if (hit) {
      ++report.covered;
    } else if (report.uncovered.size() < kKeepUncovered) {
      report.uncovered.emplace_back(z.begin(), z.end());
    }
  });
  return report;
}

IntersectionReport shared_basis_check(const Polymatroid& m, int t, int u) {
  const int n = m.size();
  const std::vector<TopDegreeFace> faces = faces_for(m);
  IntersectionReport report;
  for_each_lattice_point(m, t, u, [&](std::span<const int> z) {
    std::vector<int> holding;
    for (int k = 0; k < static_cast<int>(faces.size()); ++k) {
      if (face_contains(faces[k], t, u, z)) holding.push_back(k);
    }
    for (std::size_t a = 0; a < holding.size(); ++a) {
      for (std::size_t b = a + 1; b < holding.size(); ++b) {
        ++report.pairs_checked;
        const TopDegreeFace& fa = faces[holding[a]];
        const TopDegreeFace& fb = faces[holding[b]];
        if (fa.vertex != fb.vertex) {
          if (report.violations++ == 0) {
            report.witness = "point " + point_text(z) + " lies in " +
                             face_text(fa, n) + " and " + face_text(fb, n) +
                             " with different vertices";
          }
        }
      }
    }
  });
  return report;
}

IntersectionReport interpolation_check(const Polymatroid& m, int t, int u) {
  const int n = m.size();
  const std::vector<TopDegreeFace> faces = faces_for(m);
  IntersectionReport report;
  for_each_lattice_point(m, t, u, [&](std::span<const int> z) {
    std::vector<int> holding;
    for (int k = 0; k < static_cast<int>(faces.size()); ++k) {
      if (face_contains(faces[k], t, u, z)) holding.push_back(k);
    }
    for (std::size_t a = 0; a < holding.size(); ++a) {
      for (std::size_t b = a + 1; b < holding.size(); ++b) {
        ++report.pairs_checked;
        const TopDegreeFace& fa = faces[holding[a]];
        const TopDegreeFace& fb = faces[holding[b]];
        const Subset lo = fa.partition.x & fb.partition.x;
        const Subset free = (fa.partition.x | fb.partition.x) & ~lo;
        for (Subset f = free;; f = (f - 1) & free) {
          const TopDegreeFace& fc = faces[face_index(lo | f)];
          if (!face_contains(fc, t, u, z) || fc.vertex != fa.vertex) {
            if (report.violations++ == 0) {
              report.witness = "point " + point_text(z) + " shared by " +
                               face_text(fa, n) + " and " + face_text(fb, n) +
                               " but not by " + face_text(fc, n);
            }
          }
          if (f == 0) break;
        }
      }
    }
  });
  return report;
}

}  // namespace tuttice
