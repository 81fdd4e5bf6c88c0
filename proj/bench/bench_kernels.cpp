// Copyright 2026 The dexp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dexp/contagion.hpp"
#include "dexp/graph.hpp"
#include "dexp/risk.hpp"
#include "dexp/synth.hpp"

namespace {

using namespace dexp;

// Random digraph with about `degree` out-edges per node.
ExposureGraph random_graph(int n, double degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> size(14.0, 1.5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Node> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    nodes[i].id = ProtocolId("p" + std::to_string(100000 + i));
    nodes[i].weight = size(rng);
    nodes[i].category = "other";
  }
  std::vector<EdgeSpec> edges;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < static_cast<int>(degree); ++k) {
      const int j = pick(rng);
      if (j != i && seen.insert({i, j}).second) edges.push_back({nodes[i].id, nodes[j].id, 0.01 * size(rng)});
    }
  }
  return ExposureGraph({0, 1}, std::move(nodes), edges);
}

const SynthData& corpus() {
  static const SynthData d = [] {
    SynthConfig sc;
    sc.shift_weeks = periodic_shifts(sc.n_weeks, 6);
    return generate_synthetic(sc);
  }();
  return d;
}

void BM_PageRank(benchmark::State& state) {
  const ExposureGraph g = random_graph(static_cast<int>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pagerank(g));
  state.SetComplexityN(state.range(0));
}

void BM_PageRankReference(benchmark::State& state) {
  const ExposureGraph g = random_graph(static_cast<int>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pagerank_reference(g));
  state.SetComplexityN(state.range(0));
}

void BM_SequenceParallel(benchmark::State& state) {
  const SynthData& d = corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sequence_from_snapshots(d.snapshots, d.true_issuers, 0.0));
  }
}

void BM_SequenceSerial(benchmark::State& state) {
  const SynthData& d = corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sequence_from_snapshots_serial(d.snapshots, d.true_issuers, 0.0));
  }
}

void BM_ContagionLargestProtocol(benchmark::State& state) {
  const ExposureGraph g = random_graph(static_cast<int>(state.range(0)), 8, 2);
  ScenarioSpec spec;
  spec.name = "largest";
  spec.loss_ratio = 1.0;
  spec.tau = 0.01;
  const auto shocks = resolve_scenario(g, spec);
  for (auto _ : state) benchmark::DoNotOptimize(run_contagion(g, shocks, spec.tau));
  state.SetComplexityN(state.range(0));
}

void BM_ContagionSimulatorOnly(benchmark::State& state) {
  const ExposureGraph g = random_graph(static_cast<int>(state.range(0)), 8, 2);
  const ContagionNetwork net = make_contagion_network(g);
  const std::vector<std::pair<std::size_t, double>> shocks{{0, 0.8}, {1, 0.8}};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_contagion(net, shocks, 0.01));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_PageRank)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_PageRankReference)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_SequenceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SequenceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContagionLargestProtocol)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_ContagionSimulatorOnly)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
