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

#include "tuttice/activity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tuttice/error.hpp"
#include "tuttice/lattice.hpp"

namespace tuttice {

ElementOrder::ElementOrder(Kind kind, std::vector<int> sequence)
    : kind_(kind), sequence_(std::move(sequence)), position_(sequence_.size(), -1) {
  for (int p = 0; p < size(); ++p) {
    const int e = sequence_[p];
    if (e < 0 || e >= size() || position_[e] != -1) {
      throw Error(ErrorCode::kInvalidParams, "element order is not a permutation");
    }
    position_[e] = p;
  }
}

ElementOrder ElementOrder::natural(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return ElementOrder(Kind::kNatural, std::move(seq));
}

ElementOrder ElementOrder::reversed(int n) {
  std::vector<int> seq(n);
  std::iota(seq.rbegin(), seq.rend(), 0);
  return ElementOrder(Kind::kReversed, std::move(seq));
}

ElementOrder ElementOrder::from_sequence(std::vector<int> smallest_first) {
  return ElementOrder(Kind::kCustom, std::move(smallest_first));
}

int ElementOrder::smallest(Subset s) const {
  for (int e : sequence_) {
    if (contains(s, e)) return e;
  }
  throw Error(ErrorCode::kInvalidParams, "smallest element of the empty set");
}

namespace {

void check_order(const Polymatroid& m, const ElementOrder& order) {
  if (order.size() != m.size()) {
    throw Error(ErrorCode::kInvalidParams, "element order has wrong size");
  }
}

std::string vector_text(const BaseVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

template <typename IsBase>
std::vector<std::pair<int, int>> transfers_with(const BaseVector& x, IsBase&& is_b) {
  const int n = static_cast<int>(x.size());
  std::vector<std::pair<int, int>> out;
  BaseVector y = x;
  for (int from = 0; from < n; ++from) {
    if (x[from] == 0) continue;
    for (int to = 0; to < n; ++to) {
      if (to == from) continue;
      --y[from];
      ++y[to];
      if (is_b(y)) out.emplace_back(from, to);
      ++y[from];
      --y[to];
    }
  }
  return out;
}

ActivityRecord record_from(const BaseVector& x,
                           const std::vector<std::pair<int, int>>& moves,
                           const ElementOrder& order) {
  const int n = static_cast<int>(x.size());
  ActivityRecord rec;
  rec.base = x;
  rec.internal_active = full_set(n);
  rec.external_active = full_set(n);
  for (const auto& [from, to] : moves) {
    if (order.less(to, from)) rec.internal_active &= ~singleton(from);
    if (order.less(from, to)) rec.external_active &= ~singleton(to);
  }
  rec.internal_inactive = n - cardinality(rec.internal_active);
  rec.external_inactive = n - cardinality(rec.external_active);
  return rec;
}

void require_matroid(const Polymatroid& m, const char* what) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid, std::string(what) + " needs a matroid");
  }
}

bool is_basis(const Polymatroid& m, Subset b) {
  return cardinality(b) == m.rank() && m.rank(b) == m.rank();
}

}  // namespace

std::vector<std::pair<int, int>> transfers(const Polymatroid& m,
                                           const BaseVector& x) {
  if (!is_base(m, x)) {
    throw Error(ErrorCode::kNotABase, vector_text(x) + " is not a base");
  }
  return transfers_with(x, [&](const BaseVector& y) { return is_base(m, y); });
}

ActivityRecord activity_record(const Polymatroid& m, const BaseVector& x,
                               const ElementOrder& order) {
  check_order(m, order);
  return record_from(x, transfers(m, x), order);
}

std::vector<ActivityRecord> activity_records(const Polymatroid& m,
                                             const ElementOrder& order) {
  check_order(m, order);
  const std::vector<BaseVector> bases = enumerate_bases(m);
  const std::set<BaseVector> lookup(bases.begin(), bases.end());
  std::vector<ActivityRecord> out;
  out.reserve(bases.size());
  for (const BaseVector& x : bases) {
    const auto moves = transfers_with(
        x, [&](const BaseVector& y) { return lookup.count(y) > 0; });
    out.push_back(record_from(x, moves, order));
  }
  return out;
}

BivarPoly internal_polynomial(const Polymatroid& m, const ElementOrder& order) {
  BivarPoly out;
  for (const ActivityRecord& rec : activity_records(m, order)) {
    out.add_term(rec.internal_inactive, 0, 1);
  }
  return out;
}

BivarPoly internal_polynomial(const Polymatroid& m) {
  return internal_polynomial(m, ElementOrder::natural(m.size()));
}

BivarPoly external_polynomial(const Polymatroid& m, const ElementOrder& order) {
  BivarPoly out;
  for (const ActivityRecord& rec : activity_records(m, order)) {
    out.add_term(rec.external_inactive, 0, 1);
  }
  return out;
}

BivarPoly external_polynomial(const Polymatroid& m) {
  return external_polynomial(m, ElementOrder::natural(m.size()));
}

std::vector<Subset> matroid_bases(const Polymatroid& m) {
  require_matroid(m, "basis listing");
  std::vector<Subset> out;
  for (Subset b = 0; b <= m.ground(); ++b) {
    if (is_basis(m, b)) out.push_back(b);
  }
  return out;
}

Subset fundamental_circuit(const Polymatroid& m, Subset basis, int element) {
  require_matroid(m, "fundamental circuit");
  if (!is_basis(m, basis)) {
    throw Error(ErrorCode::kNotABasis,
                "{" + subset_key(basis, m.size()) + "} is not a basis");
  }
  if (contains(basis, element)) {
    throw Error(ErrorCode::kInvalidParams, "element lies in the basis");
  }
  // f belongs to the circuit iff dropping it from B + e leaves B + e - f
  // independent, i.e. a basis.
  const Subset closed = basis | singleton(element);
  Subset circuit = singleton(element);
  for (int f : elements_of(basis)) {
    if (m.rank(closed & ~singleton(f)) == m.rank()) circuit |= singleton(f);
  }
  return circuit;
}

Subset fundamental_cocircuit(const Polymatroid& m, Subset basis, int element) {
  require_matroid(m, "fundamental cocircuit");
  if (!is_basis(m, basis)) {
    throw Error(ErrorCode::kNotABasis,
                "{" + subset_key(basis, m.size()) + "} is not a basis");
  }
  if (!contains(basis, element)) {
    throw Error(ErrorCode::kInvalidParams, "element lies outside the basis");
  }
  const Polymatroid dual = s_dual(m, 1);
  return fundamental_circuit(dual, m.ground() & ~basis, element);
}

ClassicActivities classic_activities(const Polymatroid& m, Subset basis,
                                     const ElementOrder& order) {
  require_matroid(m, "classic activities");
  check_order(m, order);
  if (!is_basis(m, basis)) {
    throw Error(ErrorCode::kNotABasis,
                "{" + subset_key(basis, m.size()) + "} is not a basis");
  }
  const Polymatroid dual = s_dual(m, 1);
  const Subset cobasis = m.ground() & ~basis;
  ClassicActivities out;
  for (int e = 0; e < m.size(); ++e) {
    if (contains(basis, e)) {
      if (order.smallest(fundamental_circuit(dual, cobasis, e)) == e) {
        out.internal |= singleton(e);
      }
    } else if (order.smallest(fundamental_circuit(m, basis, e)) == e) {
      out.external |= singleton(e);
    }
  }
  return out;
}

BivarPoly tutte_from_activities(const Polymatroid& m, const ElementOrder& order) {
  BivarPoly out;
  for (Subset b : matroid_bases(m)) {
    const ClassicActivities act = classic_activities(m, b, order);
    out.add_term(cardinality(act.internal), cardinality(act.external), 1);
  }
  return out;
}

BivarPoly tutte_from_activities(const Polymatroid& m) {
  return tutte_from_activities(m, ElementOrder::natural(m.size()));
}

std::vector<DawsonInterval> dawson_partition(const Polymatroid& m,
                                             const ElementOrder& order) {
  std::vector<DawsonInterval> out;
  for (Subset b : matroid_bases(m)) {
    const ClassicActivities act = classic_activities(m, b, order);
    out.push_back({b & ~act.internal, b | act.external, b});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return dawson_less(a.lower, b.lower);
  });
  return out;
}

std::vector<DawsonInterval> dawson_partition(const Polymatroid& m) {
  return dawson_partition(m, ElementOrder::natural(m.size()));
}

DawsonValidation validate_dawson_partition(
    const std::vector<DawsonInterval>& intervals, int n) {
  DawsonValidation v;
  std::vector<int> hits(std::size_t{1} << n, 0);
  for (const DawsonInterval& iv : intervals) {
    if (!is_subset(iv.lower, iv.upper)) {
      v.witness = "interval with lower end outside upper end";
      return v;
    }
    const Subset free = iv.upper & ~iv.lower;
    // Walk all subsets of the free part.
    for (Subset f = free;; f = (f - 1) & free) {
      ++hits[iv.lower | f];
      if (f == 0) break;
    }
  }
  v.covers_every_subset_once = true;
  for (Subset s = 0; s < hits.size(); ++s) {
    if (hits[s] != 1) {
      v.covers_every_subset_once = false;
      v.witness = "{" + subset_key(s, n) + "} covered " +
                  std::to_string(hits[s]) + " times";
      break;
    }
  }
  std::vector<DawsonInterval> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return dawson_less(a.lower, b.lower);
  });
  v.upper_ends_increasing = true;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (!dawson_less(sorted[k - 1].upper, sorted[k].upper)) {
      v.upper_ends_increasing = false;
      if (v.witness.empty()) {
        v.witness = "upper ends {" + subset_key(sorted[k - 1].upper, n) +
                    "} and {" + subset_key(sorted[k].upper, n) +
                    "} out of order";
      }
      break;
    }
  }
  return v;
}

}  // namespace tuttice
