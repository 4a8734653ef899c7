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

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "tuttice/activity.hpp"
#include "tuttice/lattice.hpp"
#include "tuttice/polymatroid.hpp"
#include "tuttice/qpoly.hpp"
#include "tuttice/subdivision.hpp"
#include "tuttice/tutte.hpp"

namespace {

using tuttice::Polymatroid;

Polymatroid complete_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= vertices; ++a) {
    for (int b = a + 1; b <= vertices; ++b) edges.emplace_back(a, b);
  }
  return tuttice::graphic_matroid(vertices, edges);
}

void BM_CountLatticePointsK4(benchmark::State& state) {
  const Polymatroid m = complete_graph(4);
  const int tu = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::count_lattice_points(m, tu, tu));
}
BENCHMARK(BM_CountLatticePointsK4)->Arg(1)->Arg(3)->Arg(5);

void BM_CountLatticePointsK5(benchmark::State& state) {
  const Polymatroid m = complete_graph(5);
  const int tu = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::count_lattice_points(m, tu, tu));
}
BENCHMARK(BM_CountLatticePointsK5)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_QprimeUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polymatroid m = tuttice::uniform_matroid(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::qprime(m));
}
BENCHMARK(BM_QprimeUniform)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_QprimeK5(benchmark::State& state) {
  const Polymatroid m = complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::qprime(m));
}
BENCHMARK(BM_QprimeK5)->Unit(benchmark::kMillisecond);

void BM_TutteCorankNullity(benchmark::State& state) {
  const Polymatroid m = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::tutte_corank_nullity(m));
}
BENCHMARK(BM_TutteCorankNullity)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TutteFromActivities(benchmark::State& state) {
  const Polymatroid m = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::tutte_from_activities(m));
}
BENCHMARK(BM_TutteFromActivities)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TopDegreeFaces(benchmark::State& state) {
  const Polymatroid m = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tuttice::top_degree_faces(m));
}
BENCHMARK(BM_TopDegreeFaces)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
