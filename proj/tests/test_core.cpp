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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"
#include "tuttice/error.hpp"
#include "tuttice/lattice.hpp"
#include "tuttice/polymatroid.hpp"
#include "tuttice/subset.hpp"

namespace tuttice {
namespace {

using testing::corpus;
using testing::corpus_up_to;
using testing::error_of;
using testing::sample;

std::set<oracle::Point> base_set(const Polymatroid& m) {
  const auto bases = enumerate_bases(m);
  return {bases.begin(), bases.end()};
}

// Axioms checked over all pairs, independently of the library's local test.
bool satisfies_axioms(int n, const std::vector<int>& table) {
  if (table[0] != 0) return false;
  for (Subset a = 0; a < table.size(); ++a) {
    if (table[a] < 0) return false;
    for (Subset b = 0; b < table.size(); ++b) {
      if ((a & ~b) == 0 && table[a] > table[b]) return false;
      if (table[a | b] + table[a & b] > table[a] + table[b]) return false;
    }
  }
  (void)n;
  return true;
}

TEST(MakePolymatroid, AcceptsUniformRankOneOnTwo) {
  const Polymatroid m = make_polymatroid(2, {0, 1, 1, 1});
  EXPECT_TRUE(m.is_matroid());
  EXPECT_EQ(m, uniform_matroid(1, 2));
}

TEST(MakePolymatroid, RejectsNonzeroEmptyRank) {
  std::string message;
  EXPECT_EQ(error_of([] { make_polymatroid(2, {1, 1, 1, 1}); }, &message),
            ErrorCode::kAxiomViolation);
  EXPECT_NE(message.find("P1"), std::string::npos) << message;
}

TEST(MakePolymatroid, AcceptsRankOneMatroidWithLoop) {
  // r(S) = 1 iff S meets {1,2}.
  std::vector<int> table(8);
  for (Subset s = 0; s < 8; ++s) table[s] = (s & 3U) ? 1 : 0;
  const Polymatroid m = make_polymatroid(3, table);
  EXPECT_TRUE(m.is_matroid());
  EXPECT_EQ(m, sample());
}

TEST(MakePolymatroid, ReportsMonotonicityAndSubmodularityWitnesses) {
  std::string message;
  EXPECT_EQ(error_of([] { make_polymatroid(2, {0, 2, 1, 1}); }, &message),
            ErrorCode::kAxiomViolation);
  EXPECT_NE(message.find("P2"), std::string::npos) << message;
  EXPECT_EQ(error_of([] { make_polymatroid(2, {0, 1, 1, 3}); }, &message),
            ErrorCode::kAxiomViolation);
  EXPECT_NE(message.find("P3"), std::string::npos) << message;
}

TEST(MakePolymatroid, RejectsBadShapes) {
  EXPECT_TUTTICE_ERROR(make_polymatroid(2, {0, -1, 0, 0}), ErrorCode::kNegativeRank);
  EXPECT_TUTTICE_ERROR(make_polymatroid(2, {0, 1, 1}), ErrorCode::kInvalidParams);
  EXPECT_TUTTICE_ERROR(make_polymatroid(17, {}), ErrorCode::kSizeCapExceeded);
}

TEST(MakePolymatroid, AgreesWithPairwiseAxiomCheckOnRandomTables) {
  std::mt19937 rng(7);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> table(std::size_t{1} << n);
    // Random monotone-ish tables: many are submodular, many are not.
    for (Subset s = 1; s < table.size(); ++s) {
      table[s] = std::popcount(s) + std::uniform_int_distribution<int>(-1, 1)(rng);
      table[s] = std::max(table[s], 0);
    }
    const bool valid = satisfies_axioms(n, table);
    const auto err = error_of([&] { make_polymatroid(n, table); });
    EXPECT_EQ(valid, !err.has_value()) << "trial " << trial;
    accepted += valid ? 1 : 0;
  }
  EXPECT_GT(accepted, 100);
  EXPECT_LT(accepted, 2900);
}

TEST(MakePolymatroid, MatroidFlagIsUnitIncrease) {
  for (const auto& [name, m] : testing::random_polymatroids(60, 4, 3)) {
    bool unit = true;
    for (Subset s = 0; s <= m.ground(); ++s) {
      for (int e = 0; e < m.size(); ++e) {
        if (m.rank(s | singleton(e)) > m.rank(s) + 1) unit = false;
      }
    }
    EXPECT_EQ(m.is_matroid(), unit) << name;
  }
}

TEST(UniformMatroid, Examples) {
  EXPECT_EQ(uniform_matroid(1, 2).table().size(), 4U);
  EXPECT_EQ(uniform_matroid(0, 1).rank(), 0);
  const std::set<oracle::Point> expected{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(base_set(uniform_matroid(2, 3)), expected);
  EXPECT_TUTTICE_ERROR(uniform_matroid(3, 2), ErrorCode::kInvalidParams);
  EXPECT_TUTTICE_ERROR(uniform_matroid(-1, 2), ErrorCode::kInvalidParams);
}

TEST(GraphicMatroid, TriangleIsUniformTwoThree) {
  const std::vector<std::pair<int, int>> triangle{{1, 2}, {2, 3}, {1, 3}};
  EXPECT_EQ(graphic_matroid(3, triangle), uniform_matroid(2, 3));
}

TEST(GraphicMatroid, SelfLoopIsALoop) {
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  EXPECT_EQ(graphic_matroid(1, loop).rank(), 0);
}

TEST(GraphicMatroid, CompleteGraphOnFourVertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) edges.emplace_back(a, b);
  }
  const Polymatroid k4 = graphic_matroid(4, edges);
  EXPECT_EQ(k4.rank(), 3);
  // Spanning trees: 3-edge subsets touching all four vertices without a
  // triangle, counted directly.
  int trees = 0;
  for (Subset s = 0; s < 64; ++s) {
    if (std::popcount(s) != 3) continue;
    std::vector<int> parent{0, 1, 2, 3};
    const auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    bool acyclic = true;
    for (int k = 0; k < 6; ++k) {
      if (!((s >> k) & 1U)) continue;
      const int a = find(edges[k].first - 1);
      const int b = find(edges[k].second - 1);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    trees += acyclic ? 1 : 0;
  }
  EXPECT_EQ(trees, 16);
  EXPECT_EQ(enumerate_bases(k4).size(), static_cast<std::size_t>(trees));
}

TEST(GraphicMatroid, RejectsBadEdges) {
  const std::vector<std::pair<int, int>> bad{{0, 1}};
  EXPECT_TUTTICE_ERROR(graphic_matroid(2, bad), ErrorCode::kInvalidEdge);
  const std::vector<std::pair<int, int>> too_far{{1, 3}};
  EXPECT_TUTTICE_ERROR(graphic_matroid(2, too_far), ErrorCode::kInvalidEdge);
}

TEST(FromBases, Examples) {
  EXPECT_EQ(from_bases(std::vector<BaseVector>{{1, 0}, {0, 1}}), uniform_matroid(1, 2));
  const Polymatroid m = sample();
  EXPECT_EQ(m.rank(0b001), 1);
  EXPECT_EQ(m.rank(0b100), 0);
  EXPECT_TUTTICE_ERROR(from_bases(std::vector<BaseVector>{{2, 0}, {0, 2}}),
                       ErrorCode::kNotAPolymatroidBaseSet);
  EXPECT_TUTTICE_ERROR(from_bases(std::vector<BaseVector>{{1, 0}, {1, 1}}),
                       ErrorCode::kInvalidParams);
}

TEST(FromBases, RoundTripsEveryCorpusBaseSet) {
  std::vector<NamedPolymatroid> all = corpus_up_to(6);
  for (auto& p : testing::random_polymatroids(40, 5, 11)) all.push_back(std::move(p));
  for (const auto& [name, m] : all) {
    const std::vector<BaseVector> bases = enumerate_bases(m);
    const Polymatroid back = from_bases(bases);
    EXPECT_EQ(base_set(back), base_set(m)) << name;
    EXPECT_EQ(back, m) << name;
  }
}

TEST(DirectSum, Examples) {
  const Polymatroid m = direct_sum(uniform_matroid(1, 1), uniform_matroid(1, 1));
  EXPECT_EQ(m.rank(0b01), 1);
  EXPECT_EQ(m.rank(0b10), 1);
  EXPECT_EQ(m.rank(0b11), 2);
  EXPECT_EQ(direct_sum(uniform_matroid(1, 2), uniform_matroid(0, 1)), sample());
  const Polymatroid k = direct_sum(sample(), uniform_matroid(0, 1));
  for (Subset s = 0; s < 8; ++s) EXPECT_EQ(k.rank(s), sample().rank(s));
  EXPECT_TUTTICE_ERROR(direct_sum(uniform_matroid(1, 9), uniform_matroid(1, 8)),
                       ErrorCode::kSizeCapExceeded);
}

TEST(DirectSum, FullRankAdds) {
  const auto small = corpus_up_to(4);
  for (std::size_t a = 0; a < small.size(); a += 7) {
    for (std::size_t b = 0; b < small.size(); b += 11) {
      const Polymatroid s = direct_sum(small[a].m, small[b].m);
      EXPECT_EQ(s.rank(), small[a].m.rank() + small[b].m.rank());
      EXPECT_EQ(s.size(), small[a].m.size() + small[b].m.size());
    }
  }
}

TEST(SDual, Examples) {
  EXPECT_EQ(s_dual(uniform_matroid(1, 2), 1), uniform_matroid(1, 2));
  const std::set<oracle::Point> expected{{0, 1, 1}, {1, 0, 1}};
  EXPECT_EQ(base_set(s_dual(sample(), 1)), expected);
  EXPECT_NO_THROW(s_dual(testing::doubled(), 2));
  EXPECT_TUTTICE_ERROR(s_dual(testing::doubled(), 1), ErrorCode::kSTooSmall);
}

TEST(SDual, IsAnInvolution) {
  std::vector<NamedPolymatroid> all = corpus_up_to(6);
  for (auto& p : testing::random_polymatroids(40, 5, 5)) all.push_back(std::move(p));
  for (const auto& [name, m] : all) {
    for (int s = std::max(1, m.max_singleton_rank()); s <= m.max_singleton_rank() + 2; ++s) {
      EXPECT_EQ(s_dual(s_dual(m, s), s), m) << name << " s=" << s;
    }
  }
}

TEST(SDual, MatroidBasesAreComplements) {
  for (const auto& [name, m] : corpus_up_to(6)) {
    const Polymatroid dual = s_dual(m, 1);
    EXPECT_TRUE(dual.is_matroid()) << name;
    std::set<Subset> primal;
    for (Subset b : oracle::bases_by_rank(m)) primal.insert(b);
    for (Subset b : oracle::bases_by_rank(dual)) {
      EXPECT_TRUE(primal.contains(m.ground() & ~b)) << name;
    }
    EXPECT_EQ(oracle::bases_by_rank(dual).size(), primal.size()) << name;
  }
}

TEST(ScaleRank, Examples) {
  const std::set<oracle::Point> doubled{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}};
  EXPECT_EQ(base_set(scale_rank(sample(), 2)), doubled);
  EXPECT_EQ(scale_rank(sample(), 1), sample());
  const std::set<oracle::Point> u12{{2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(base_set(scale_rank(uniform_matroid(1, 2), 2)), u12);
  EXPECT_TUTTICE_ERROR(scale_rank(sample(), 0), ErrorCode::kInvalidParams);
}

TEST(Relaxation, RestoresUniformMatroid) {
  // Bases: all 2-subsets of {1,2,3} except {1,2}; so 1 and 2 are parallel.
  const Polymatroid m = from_bases(std::vector<BaseVector>{{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(is_circuit_hyperplane(m, 0b011));
  EXPECT_EQ(relax_circuit_hyperplane(m, 0b011), uniform_matroid(2, 3));
}

TEST(Relaxation, Errors) {
  for (Subset c = 0; c < 8; ++c) {
    EXPECT_TUTTICE_ERROR(relax_circuit_hyperplane(uniform_matroid(2, 3), c),
                         ErrorCode::kNotACircuitHyperplane);
  }
  EXPECT_TUTTICE_ERROR(relax_circuit_hyperplane(testing::doubled(), 1),
                       ErrorCode::kNotAMatroid);
}

TEST(Relaxation, AddsExactlyOneBasis) {
  int relaxed = 0;
  for (const auto& [name, m] : corpus_up_to(6)) {
    for (Subset c : circuit_hyperplanes(m)) {
      const Polymatroid r = relax_circuit_hyperplane(m, c);
      EXPECT_TRUE(r.is_matroid()) << name;
      const auto before = oracle::bases_by_rank(m);
      const auto after = oracle::bases_by_rank(r);
      EXPECT_EQ(after.size(), before.size() + 1) << name;
      EXPECT_TRUE(std::find(after.begin(), after.end(), c) != after.end()) << name;
      ++relaxed;
    }
  }
  EXPECT_GT(relaxed, 10);
}

TEST(LoopsAndColoops, AppendElement) {
  const Polymatroid m = sample();
  const Polymatroid l = add_loop(m);
  const Polymatroid c = add_coloop(m);
  EXPECT_EQ(l.size(), 4);
  EXPECT_EQ(l.rank(0b1000), 0);
  EXPECT_EQ(c.rank(), m.rank() + 1);
  EXPECT_EQ(c.rank(0b1000), 1);
}

TEST(SubsetKeys, RoundTrip) {
  EXPECT_EQ(subset_key(0, 3), "");
  EXPECT_EQ(subset_key(0b101, 3), "13");
  EXPECT_EQ(parse_subset_key("13", 3), 0b101U);
  EXPECT_EQ(parse_subset_key("", 3), 0U);
  EXPECT_EQ(subset_key(0b1000000001, 10), "1,10");
  EXPECT_EQ(parse_subset_key("1,10", 10), 0b1000000001U);
  EXPECT_TUTTICE_ERROR(parse_subset_key("4", 3), ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_subset_key("11", 3), ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_subset_key("1a", 3), ErrorCode::kMalformedInput);
}

TEST(Corpus, HasTheAdvertisedMembers) {
  EXPECT_EQ(uniform_corpus().size(), 27U);
  EXPECT_EQ(connected_graphs(5).size(), 30U);  // 1 + 2 + 6 + 21
  const auto random = random_matroid_corpus();
  EXPECT_EQ(random.size(), 100U);
  for (const auto& [name, m] : random) {
    EXPECT_TRUE(m.is_matroid()) << name;
    EXPECT_LE(m.size(), 6) << name;
  }
  // Deterministic for a fixed seed.
  const auto again = random_matroid_corpus();
  for (std::size_t k = 0; k < random.size(); ++k) EXPECT_EQ(random[k].m, again[k].m);
}

TEST(Corpus, SingleElementExtensionsOfUniformTwoFour) {
  // Modular cuts of U_{2,4}: empty (coloop), {E} (free), one per point
  // (parallel element), all flats (loop).
  const auto ext = single_element_extensions(uniform_matroid(2, 4));
  EXPECT_EQ(ext.size(), 7U);
  for (const Polymatroid& e : ext) {
    EXPECT_EQ(e.size(), 5);
    for (Subset s = 0; s < 16; ++s) EXPECT_EQ(e.rank(s), uniform_matroid(2, 4).rank(s));
  }
}

}  // namespace
}  // namespace tuttice
