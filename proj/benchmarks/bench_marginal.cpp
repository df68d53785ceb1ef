// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "asmop/marginal.hpp"
#include "asmop/rng.hpp"

namespace {

void BM_MinNormPoint(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::mt19937_64 rng(42);
  std::vector<asmop::Vector> gradients;
  for (int i = 0; i < q; ++i) gradients.push_back(asmop::normal_vector(rng, n));
  const double tol = asmop::default_marginal_tol(q);
  for (auto _ : state) {
    auto result = asmop::min_norm_point(gradients, tol);
    benchmark::DoNotOptimize(result.omega);
  }
}

void BM_SimplexProjection(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const asmop::Vector v = asmop::normal_vector(rng, q);
  for (auto _ : state) {
    auto p = asmop::project_to_simplex(v);
    benchmark::DoNotOptimize(p);
  }
}

}  // namespace

BENCHMARK(BM_MinNormPoint)->Args({2, 32})->Args({4, 32})->Args({8, 32})->Args({2, 1024});
BENCHMARK(BM_SimplexProjection)->Arg(4)->Arg(16)->Arg(64);
