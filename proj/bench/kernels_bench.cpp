// Copyright 2026 The rgt Authors
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

// Serial reference vs OpenMP kernels, plus the closed-form vs explicit route.

#include <benchmark/benchmark.h>

#include <map>

#include "rgt/graph.hpp"
#include "rgt/growth.hpp"
#include "rgt/hitting_time.hpp"
#include "rgt/random_models.hpp"
#include "rgt/recursive_models.hpp"
#include "rgt/serial.hpp"
#include "rgt/wiener.hpp"

namespace {

using namespace rgt;

const Graph& tree_of_size(std::int64_t n) {
  static std::map<std::int64_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, random_attachment_tree(static_cast<int>(n), 1).graph()).first;
  return it->second;
}

void BM_DistanceSumsParallel(benchmark::State& state) {
  const Graph& g = tree_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(distance_sums(g));
  state.SetComplexityN(state.range(0));
}
void BM_DistanceSumsSerial(benchmark::State& state) {
  const Graph& g = tree_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::distance_sums(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceSumsParallel)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK(BM_DistanceSumsSerial)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_AllPairsParallel(benchmark::State& state) {
  const Graph& g = tree_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
void BM_AllPairsSerial(benchmark::State& state) {
  const Graph& g = tree_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsParallel)->Arg(1024)->Arg(4096);
BENCHMARK(BM_AllPairsSerial)->Arg(1024)->Arg(4096);

void BM_WalksParallel(benchmark::State& state) {
  const Graph& g = tree_of_size(state.range(0));
  WalkConfig cfg;
  cfg.trials = 20'000;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_mean_hitting_time(g, cfg));
}
void BM_WalksSerial(benchmark::State& state) {
  const Graph& g = tree_of_size(state.range(0));
  WalkConfig cfg;
  cfg.trials = 20'000;
  for (auto _ : state) benchmark::DoNotOptimize(serial::simulate_mean_hitting_time(g, cfg));
}
BENCHMARK(BM_WalksParallel)->Arg(16)->Arg(64);
BENCHMARK(BM_WalksSerial)->Arg(16)->Arg(64);

void BM_TreeSamplesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_wiener_values(RandomModelKind::BA, 200, 2000, 3));
}
void BM_TreeSamplesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::sample_wiener_values(RandomModelKind::BA, 200, 2000, 3));
}
BENCHMARK(BM_TreeSamplesParallel);
BENCHMARK(BM_TreeSamplesSerial);

// mean hitting time of type2:2 generation t from an edge
void BM_ClosedFormMht(benchmark::State& state) {
  const ModelParams p = ModelParams::from_seed(build_path(2), Family::TypeII, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(model_mht_unrolled(p));
}
void BM_ExplicitMht(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Tree tree = construct_model(build_path(2), Family::TypeII, 2, t);
    benchmark::DoNotOptimize(Rational(2 * wiener_index_edge_cut(tree), Integer(tree.num_vertices())));
  }
}
BENCHMARK(BM_ClosedFormMht)->DenseRange(2, 8, 2)->Arg(30);
BENCHMARK(BM_ExplicitMht)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
