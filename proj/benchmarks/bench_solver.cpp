// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "asmop/problem_families.hpp"
#include "asmop/solver.hpp"

namespace {

void BM_SolverIterations(benchmark::State& state) {
  const int n = 21;
  const int samples = static_cast<int>(state.range(0));
  const auto data = asmop::make_synthetic_classification(n, samples, 2, 7);
  const auto problem = asmop::make_logistic_problem(data, {1e-3, 1e-3});
  asmop::SolverConfig config;
  config.x0 = asmop::Vector::Constant(n, 0.1);
  config.max_iterations = 50;
  config.track_omega_true = false;
  for (auto _ : state) {
    const auto result = asmop::run(problem, config);
    benchmark::DoNotOptimize(result.scalar_products);
  }
  state.SetItemsProcessed(state.iterations() * 50);
}

void BM_ModelBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto data = asmop::make_synthetic_classification(n, 200, 2, 3);
  const auto problem = asmop::make_logistic_problem(data, {1e-3, 1e-3});
  asmop::CostMeter meter;
  asmop::MeteredEvaluator eval(problem, meter, false);
  const asmop::Vector x = asmop::Vector::Constant(n, 0.1);
  const auto tuple = problem.full_sample_tuple();
  for (auto _ : state) {
    auto model = asmop::QuadraticMaxModel::build(eval, x, tuple, {});
    benchmark::DoNotOptimize(model.beta());
  }
}

}  // namespace

BENCHMARK(BM_SolverIterations)->Arg(200)->Arg(1000);
BENCHMARK(BM_ModelBuild)->Arg(8)->Arg(32)->Arg(64);
