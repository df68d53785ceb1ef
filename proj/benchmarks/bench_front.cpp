// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "asmop/pareto_front.hpp"
#include "asmop/rng.hpp"

namespace {

void BM_NondominatedFilter(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  std::mt19937_64 rng(9);
  std::vector<asmop::FrontEntry> entries;
  for (int i = 0; i < count; ++i) {
    asmop::FrontEntry e;
    e.point = asmop::Vector::Zero(2);
    e.objectives = asmop::normal_vector(rng, 2);
    entries.push_back(std::move(e));
  }
  for (auto _ : state) {
    auto filtered = asmop::nondominated_filter(entries);
    benchmark::DoNotOptimize(filtered.size());
  }
  state.SetComplexityN(count);
}

}  // namespace

BENCHMARK(BM_NondominatedFilter)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

BENCHMARK_MAIN();
