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

#include "tuttice/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tuttice/error.hpp"

namespace tuttice {
namespace {

constexpr int kNoBound = std::numeric_limits<int>::max() / 4;

// Depth-first walk over coordinates with exact interval bounds.
//
// Every constraint z(S) <= f(S) of the sum either lies inside the prefix
// {0..n-2} or, through the equality z(E) = f(E), becomes the lower bound
// z(E\S) >= f(E) - f(S) on a prefix subset.  Checking both bounds for all
// prefix subsets therefore certifies the whole point once the last
// coordinate is fixed by the equality.
class SumWalker {
 public:
  SumWalker(const Polymatroid& m, int t, int u)
      : m_(m), n_(m.size()), u_(u), total_(m.rank() + u - t),
        prefix_(std::size_t{1} << std::max(0, n_ - 1), 0), z_(n_, 0) {}

  void visit(const std::function<void(std::span<const int>)>& fn) {
    if (n_ == 1) {
      z_[0] = total_;
      fn(z_);
      return;
    }
    visit_from(0, fn);
  }

 private:
  // f(S) for proper nonempty S.
  int cap(Subset s) const { return m_.rank(s) + u_; }

  // Admissible interval for z_k given z_0..z_{k-1}; k <= n-2.
  std::pair<int, int> bounds(int k) const {
    int lo = -kNoBound;
    int hi = kNoBound;
    const Subset e = m_.ground();
    const Subset below = full_set(k);
    for (Subset rest = 0; rest <= below; ++rest) {
      const Subset s = rest | singleton(k);
      const int partial = prefix_[rest];
      hi = std::min(hi, cap(s) - partial);
      lo = std::max(lo, total_ - cap(e & ~s) - partial);
    }
    return {lo, hi};
  }

  void push(int k, int value) {
    z_[k] = value;
    const Subset half = singleton(k);
    for (Subset rest = 0; rest < half; ++rest) {
      prefix_[rest | half] = prefix_[rest] + value;
    }
  }

  void visit_from(int k, const std::function<void(std::span<const int>)>& fn) {
    const auto [lo, hi] = bounds(k);
    for (int v = lo; v <= hi; ++v) {
      push(k, v);
      if (k == n_ - 2) {
        z_[n_ - 1] = total_ - prefix_[full_set(n_ - 1)];
        fn(z_);
      } else {
        visit_from(k + 1, fn);
      }
    }
  }

  const Polymatroid& m_;
  int n_;
  int u_;
  int total_;
  std::vector<int> prefix_;
  std::vector<int> z_;
};

// Memoized counter.  After fixing z_0..z_{j-1}, the remaining problem is
// determined by the residual capacities
//   G(T) = min over A in the prefix of f(A + T) - z(A),   T in the suffix,
// (with f(empty) = f(E) = infinity, since neither is constrained) and the
// remaining coordinate sum.  The suffix has to satisfy z(T) <= G(T) for
// every T, where G(empty) >= 0 checks the prefix itself and the full suffix
// is fixed by the sum.  Equal residual problems reached along different
// prefixes are counted once.
class MemoCounter {
 public:
  MemoCounter(const Polymatroid& m, int t, int u) : n_(m.size()), memo_(n_ + 1) {
    residual_.assign(std::size_t{1} << n_, kNoBound);
    for (Subset s = 1; s < m.ground(); ++s) residual_[s] = m.rank(s) + u;
    remaining_ = m.rank() + u - t;
  }

  Count count() { return count_suffix(residual_, remaining_, n_); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept {
      std::size_t h = key.size();
      for (int v : key) h = h * 1000003U ^ static_cast<std::size_t>(v + 0x9e3779b9);
      return h;
    }
  };

  // g is indexed by subsets of the `size` remaining coordinates (bit 0 is
  // the next coordinate); `rest` is their required sum.
  Count count_suffix(const std::vector<int>& g, int rest, int size) {
    const Subset all = full_set(size);
    if (g[0] < 0 || g[all] < rest) return 0;
    if (size == 1) return 1;
    if (size == 2) {
      const long long hi = g[1];
      const long long lo = static_cast<long long>(rest) - g[2];
      return hi < lo ? 0 : static_cast<Count>(hi - lo + 1);
    }
    std::vector<int> key;
    key.reserve(g.size() + 1);
    key.push_back(rest);
    key.insert(key.end(), g.begin(), g.end());
    auto& memo = memo_[size];
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    // Bounds on the next coordinate z: z <= G({z}) and the other
    // coordinates sum to rest - z <= G(all but z).
    const long long hi = g[1];
    const long long lo = static_cast<long long>(rest) - g[all & ~Subset{1}];
    Count total = 0;
    std::vector<int> next(std::size_t{1} << (size - 1));
    for (long long z = lo; z <= hi; ++z) {
      for (Subset tail = 0; tail < next.size(); ++tail) {
        const long long with = static_cast<long long>(g[(tail << 1) | 1]) - z;
        const long long best = std::min<long long>(g[tail << 1], with);
        next[tail] = best >= kNoBound / 2 ? kNoBound : static_cast<int>(best);
      }
      const Count sub = count_suffix(next, static_cast<int>(rest - z), size - 1);
      if (__builtin_add_overflow(total, sub, &total)) {
        throw Error(ErrorCode::kCountOverflow, "lattice point count exceeds int64");
      }
    }
    memo.emplace(std::move(key), total);
    return total;
  }

  int n_;
  std::vector<int> residual_;
  int remaining_ = 0;
  std::vector<std::unordered_map<std::vector<int>, Count, KeyHash>> memo_;
};

void check_params(int t, int u) {
  if (t < 0 || u < 0) {
    throw Error(ErrorCode::kInvalidParams, "t and u must be nonnegative");
  }
}

}  // namespace

bool in_minkowski_sum(const Polymatroid& m, int t, int u,
                      std::span<const int> z) {
  const int n = m.size();
  if (static_cast<int>(z.size()) != n) return false;
  const Subset e = m.ground();
  std::vector<long long> sums(std::size_t{1} << n, 0);
  for (Subset s = 1; s <= e; ++s) {
    sums[s] = sums[s & (s - 1)] + z[std::countr_zero(s)];
    if (s != e && sums[s] > m.rank(s) + u) return false;
  }
  return sums[e] == static_cast<long long>(m.rank()) + u - t;
}

bool is_base(const Polymatroid& m, std::span<const int> x) {
  if (std::any_of(x.begin(), x.end(), [](int c) { return c < 0; })) {
    return false;
  }
  return in_minkowski_sum(m, 0, 0, x);
}

void for_each_lattice_point(
    const Polymatroid& m, int t, int u,
    const std::function<void(std::span<const int>)>& visit) {
  check_params(t, u);
  SumWalker(m, t, u).visit(visit);
}

std::vector<std::vector<int>> lattice_points(const Polymatroid& m, int t,
                                             int u) {
  std::vector<std::vector<int>> out;
  for_each_lattice_point(m, t, u, [&](std::span<const int> z) {
    out.emplace_back(z.begin(), z.end());
  });
  return out;
}

std::vector<BaseVector> enumerate_bases(const Polymatroid& m) {
  return lattice_points(m, 0, 0);
}

Count count_lattice_points(const Polymatroid& m, int t, int u) {
  check_params(t, u);
  return MemoCounter(m, t, u).count();
}

std::optional<Decomposition> decompose_point(const Polymatroid& m, int t,
                                             int u, std::span<const int> z) {
  check_params(t, u);
  const int n = m.size();
  if (static_cast<int>(z.size()) != n) return std::nullopt;
  // With w = z - b, increments a = w+ + c and decrements d = w- + c for any
  // c >= 0 with |c| = u - |w+|; a witness exists iff |w+| <= u (and then
  // |w-| <= t follows from the coordinate sums).
  for (const BaseVector& b : enumerate_bases(m)) {
    int up = 0;
    int down = 0;
    for (int i = 0; i < n; ++i) {
      const int w = z[i] - b[i];
      (w > 0 ? up : down) += std::abs(w);
    }
    if (up > u || down > t || u - up != t - down) continue;
    Decomposition d{b, {}, {}};
    for (int i = 0; i < n; ++i) {
      const int w = z[i] - b[i];
      for (int k = 0; k < w; ++k) d.increments.push_back(i);
      for (int k = 0; k < -w; ++k) d.decrements.push_back(i);
    }
    for (int k = 0; k < u - up; ++k) {
      d.increments.push_back(0);
      d.decrements.push_back(0);
    }
    std::sort(d.increments.begin(), d.increments.end());
    std::sort(d.decrements.begin(), d.decrements.end());
    return d;
  }
  return std::nullopt;
}

CountGrid::CountGrid(int t_max, int u_max, bool triangular)
    : t_max_(t_max), u_max_(u_max), triangular_(triangular) {
  if (t_max < 0 || u_max < 0) {
    throw Error(ErrorCode::kInvalidParams, "grid bounds must be nonnegative");
  }
  cells_.assign(static_cast<std::size_t>(t_max + 1) * (u_max + 1), -1);
}

bool CountGrid::has(int t, int u) const noexcept {
  if (t < 0 || u < 0 || t > t_max_ || u > u_max_) return false;
  return !triangular_ || t + u <= t_max_;
}

Count CountGrid::at(int t, int u) const {
  if (!has(t, u)) {
    throw Error(ErrorCode::kInvalidParams,
                "grid has no cell (" + std::to_string(t) + "," +
                    std::to_string(u) + ")");
  }
  return cells_[static_cast<std::size_t>(t) * (u_max_ + 1) + u];
}

void CountGrid::set(int t, int u, Count value) {
  if (!has(t, u)) {
    throw Error(ErrorCode::kInvalidParams, "grid cell out of range");
  }
  cells_[static_cast<std::size_t>(t) * (u_max_ + 1) + u] = value;
}

std::vector<std::vector<Count>> CountGrid::rows() const {
  std::vector<std::vector<Count>> out(t_max_ + 1);
  for (int t = 0; t <= t_max_; ++t) {
    out[t].assign(cells_.begin() + t * (u_max_ + 1),
                  cells_.begin() + (t + 1) * (u_max_ + 1));
  }
  return out;
}

CountGrid count_grid(const Polymatroid& m, int t_max, int u_max) {
  CountGrid grid(t_max, u_max, false);
  for (int t = 0; t <= t_max; ++t) {
    for (int u = 0; u <= u_max; ++u) {
      grid.set(t, u, count_lattice_points(m, t, u));
    }
  }
  return grid;
}

CountGrid count_triangle(const Polymatroid& m, int degree) {
  CountGrid grid(degree, degree, true);
  for (int t = 0; t <= degree; ++t) {
    for (int u = 0; t + u <= degree; ++u) {
      grid.set(t, u, count_lattice_points(m, t, u));
    }
  }
  return grid;
}

}  // namespace tuttice
