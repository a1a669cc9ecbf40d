// Copyright 2026 The VCA Bounds Authors
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

// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS / VCA_THREADS
// set to the core count of interest.

#include <benchmark/benchmark.h>

#include "vca/construct.h"
#include "vca/coverage.h"
#include "vca/general_lll.h"
#include "vca/generators.h"
#include "vca/hypergraph.h"

namespace vca {
namespace {

Hypergraph Triangulation(int k) {
  return RandomTriangulation({.k = k, .rng_seed = 1});
}

void BM_VerifyParallel(benchmark::State& state) {
  Hypergraph h = CompleteUniform(static_cast<int>(state.range(0)), 3);
  VcaArray a = VarDens(h, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Verify(a, h));
}

void BM_VerifySerial(benchmark::State& state) {
  Hypergraph h = CompleteUniform(static_cast<int>(state.range(0)), 3);
  VcaArray a = VarDens(h, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::Verify(a, h));
}

BENCHMARK(BM_VerifyParallel)->Arg(12)->Arg(24);
BENCHMARK(BM_VerifySerial)->Arg(12)->Arg(24);

void BM_NeighborCountsParallel(benchmark::State& state) {
  Hypergraph h = Triangulation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(NeighborCounts(h));
}

void BM_NeighborCountsSerial(benchmark::State& state) {
  Hypergraph h = Triangulation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::NeighborCounts(h));
}

BENCHMARK(BM_NeighborCountsParallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_NeighborCountsSerial)->Arg(500)->Arg(2000);

void BM_ClassifyEdgesParallel(benchmark::State& state) {
  ClassifiedHypergraph h15 = H15();
  for (auto _ : state) benchmark::DoNotOptimize(ClassifyEdges(h15.hypergraph, h15.classes));
}

void BM_ClassifyEdgesSerial(benchmark::State& state) {
  ClassifiedHypergraph h15 = H15();
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::ClassifyEdges(h15.hypergraph, h15.classes));
  }
}

BENCHMARK(BM_ClassifyEdgesParallel);
BENCHMARK(BM_ClassifyEdgesSerial);

void BM_MaximizeSlackParallel(benchmark::State& state) {
  ClassifiedHypergraph h15 = H15();
  EventClassSystem sys = MakeEventClassSystem(h15.hypergraph, h15.classes, 2);
  for (auto _ : state) benchmark::DoNotOptimize(MaximizeSlack(sys, 33.0));
}

void BM_MaximizeSlackSerial(benchmark::State& state) {
  ClassifiedHypergraph h15 = H15();
  EventClassSystem sys = MakeEventClassSystem(h15.hypergraph, h15.classes, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::MaximizeSlack(sys, 33.0));
}

BENCHMARK(BM_MaximizeSlackParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximizeSlackSerial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vca

BENCHMARK_MAIN();
