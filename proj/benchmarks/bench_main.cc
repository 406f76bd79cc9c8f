// Copyright 2026 The faqurn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "faqurn/approx.hpp"
#include "faqurn/rng.hpp"
#include "faqurn/trace.hpp"
#include "faqurn/urn.hpp"
#include "faqurn/weight_index.hpp"

namespace {

using namespace faqurn;

// Steps per second of the full urn, by update function.
void BM_UrnStep(benchmark::State &state, UpdateFunction update, TriggerSchedule schedule) {
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    UrnState urn(schedule, update);
    Xoshiro256 rng(42);
    for (std::uint64_t i = 0; i < steps; ++i) benchmark::DoNotOptimize(urn.step(rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps));
}
BENCHMARK_CAPTURE(BM_UrnStep, linear_p03, UpdateFunction::linear(1, 0),
                  TriggerSchedule::constant(0.3))
    ->Arg(200'000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_UrnStep, affine_p03, UpdateFunction::linear(1, 1),
                  TriggerSchedule::constant(0.3))
    ->Arg(200'000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_UrnStep, power_root_p03, UpdateFunction::power_root(2),
                  TriggerSchedule::constant(0.3))
    ->Arg(200'000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_UrnStep, linear_power_law, UpdateFunction::linear(1, 0),
                  TriggerSchedule::power_law(0.7))
    ->Arg(200'000)
    ->Unit(benchmark::kMillisecond);

// Full simulate() with checkpoints and tracked colors.
void BM_Simulate(benchmark::State &state) {
  SimulationConfig cfg;
  cfg.schedule = TriggerSchedule::constant(0.3);
  cfg.horizon = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    cfg.seed += 1;
    benchmark::DoNotOptimize(simulate(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(200'000)->Unit(benchmark::kMillisecond);

// Color sampling: Fenwick tree search against a linear cumulative scan over
// the same weights, each followed by a unit increment as in the urn.
std::vector<double> initial_weights(std::size_t m) {
  std::vector<double> w(m);
  Xoshiro256 rng(7);
  for (auto &x : w) x = 1.0 + static_cast<double>(rng() % 50);
  return w;
}

void BM_SampleFenwick(benchmark::State &state) {
  const auto w = initial_weights(static_cast<std::size_t>(state.range(0)));
  WeightIndex index;
  index.rebuild(w);
  Xoshiro256 rng(1);
  for (auto _ : state) {
    const std::size_t i = index.find(rng.uniform() * index.total());
    index.add(i, 1.0);
    benchmark::DoNotOptimize(i);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleFenwick)->RangeMultiplier(10)->Range(10, 1'000'000)->Complexity();

void BM_SampleLinearScan(benchmark::State &state) {
  auto w = initial_weights(static_cast<std::size_t>(state.range(0)));
  double total = 0.0;
  for (double x : w) total += x;
  Xoshiro256 rng(1);
  for (auto _ : state) {
    double target = rng.uniform() * total;
    std::size_t i = 0;
    while (i + 1 < w.size() && target >= w[i]) target -= w[i++];
    w[i] += 1.0;
    total += 1.0;
    benchmark::DoNotOptimize(i);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleLinearScan)->RangeMultiplier(10)->Range(10, 100'000)->Complexity();

// Exact law of C_n by the O(n^2) Poisson-binomial recursion.
void BM_PoissonBinomial(benchmark::State &state) {
  const auto schedule = TriggerSchedule::harmonic();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poisson_binomial_pmf(schedule, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoissonBinomial)
    ->RangeMultiplier(4)
    ->Range(64, 16'384)
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMicrosecond);

// Streamed lambda sums for the Poisson bound.
void BM_BarbourHolst(benchmark::State &state) {
  const auto schedule = TriggerSchedule::harmonic();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(barbour_holst(schedule, n));
}
BENCHMARK(BM_BarbourHolst)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
