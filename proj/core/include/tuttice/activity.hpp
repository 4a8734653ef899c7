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

#ifndef TUTTICE_ACTIVITY_HPP_
#define TUTTICE_ACTIVITY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "tuttice/bivar_poly.hpp"
#include "tuttice/polymatroid.hpp"

namespace tuttice {

// Total order on the ground set used to decide which element is "smaller".
class ElementOrder {
 public:
  enum class Kind { kNatural, kReversed, kCustom };

  static ElementOrder natural(int n);
  static ElementOrder reversed(int n);
  // 0-based elements listed from smallest to largest; must be a permutation.
  static ElementOrder from_sequence(std::vector<int> smallest_first);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  Kind kind() const noexcept { return kind_; }
  const std::vector<int>& sequence() const noexcept { return sequence_; }
  int position(int element) const { return position_[element]; }
  bool less(int a, int b) const { return position_[a] < position_[b]; }
  // Smallest element of a nonempty subset.
  int smallest(Subset s) const;

 private:
  ElementOrder(Kind kind, std::vector<int> sequence);

  Kind kind_;
  std::vector<int> sequence_;
  std::vector<int> position_;
};

// (from, to) pairs, 0-based, such that x - e_from + e_to is again a base.
// Throws NotABase.
std::vector<std::pair<int, int>> transfers(const Polymatroid& m,
                                           const BaseVector& x);

struct ActivityRecord {
  BaseVector base;
  Subset internal_active = 0;
  Subset external_active = 0;
  int internal_inactive = 0;  // n - |internal_active|
  int external_inactive = 0;  // n - |external_active|
};

// u is internally active when no transfer goes from u to a smaller element,
// externally active when no transfer comes into u from a smaller element.
ActivityRecord activity_record(const Polymatroid& m, const BaseVector& x,
                               const ElementOrder& order);

// One record per integer base, in lexicographic base order.
std::vector<ActivityRecord> activity_records(const Polymatroid& m,
                                             const ElementOrder& order);

// sum over bases of xi^{#internally inactive}, returned in the x variable.
BivarPoly internal_polynomial(const Polymatroid& m, const ElementOrder& order);
BivarPoly internal_polynomial(const Polymatroid& m);
// sum over bases of eta^{#externally inactive}, returned in the x variable.
BivarPoly external_polynomial(const Polymatroid& m, const ElementOrder& order);
BivarPoly external_polynomial(const Polymatroid& m);

// Matroid bases as subsets, increasing.
std::vector<Subset> matroid_bases(const Polymatroid& m);

// Unique circuit inside B + e for e outside the basis B.
Subset fundamental_circuit(const Polymatroid& m, Subset basis, int element);
// Unique cocircuit inside (E \ B) + f for f in B, computed as a circuit of
// the dual matroid.
Subset fundamental_cocircuit(const Polymatroid& m, Subset basis, int element);

struct ClassicActivities {
  Subset internal = 0;  // f in B, smallest in its fundamental cocircuit
  Subset external = 0;  // e not in B, smallest in its fundamental circuit
};

// Throws NotAMatroid, NotABasis.
ClassicActivities classic_activities(const Polymatroid& m, Subset basis,
                                     const ElementOrder& order);

// sum over bases of x^{|Int(B)|} y^{|Ext(B)|}.  Throws NotAMatroid.
BivarPoly tutte_from_activities(const Polymatroid& m, const ElementOrder& order);
BivarPoly tutte_from_activities(const Polymatroid& m);

// [basis \ Int(basis), basis + Ext(basis)].
struct DawsonInterval {
  Subset lower = 0;
  Subset upper = 0;
  Subset basis = 0;

  bool contains(Subset s) const {
    return is_subset(lower, s) && is_subset(s, upper);
  }
};

// Order on the power set used by Dawson partitions: a precedes b when the
// largest element of their symmetric difference lies in b.
constexpr bool dawson_less(Subset a, Subset b) { return a < b; }

// One interval per basis, sorted by lower end.  Throws NotAMatroid.
std::vector<DawsonInterval> dawson_partition(const Polymatroid& m,
                                             const ElementOrder& order);
std::vector<DawsonInterval> dawson_partition(const Polymatroid& m);

struct DawsonValidation {
  bool covers_every_subset_once = false;
  bool upper_ends_increasing = false;
  std::string witness;

  bool ok() const { return covers_every_subset_once && upper_ends_increasing; }
};

// Checks that the intervals (sorted by lower end) partition 2^E and that
// their upper ends increase in the same order.
DawsonValidation validate_dawson_partition(
    const std::vector<DawsonInterval>& intervals, int n);

}  // namespace tuttice

#endif  // TUTTICE_ACTIVITY_HPP_
