// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "asmop/baselines.hpp"
#include "asmop/problem_families.hpp"
#include "asmop/rng.hpp"
#include "asmop/trace_io.hpp"
#include "support/oracles.hpp"

using namespace asmop;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("smg step reduces to sgd for one component") {
  const auto problem = testsupport::shifted_parabola_problem(3);
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  Vector x(1);
  x[0] = 5.0;
  const SampleTuple batch = {{1}};  // gradient x - 2
  const Vector next = smg_step(eval, x, batch, 0.25, 1e-10);
  CHECK(next[0] == doctest::Approx(5.0 - 0.25 * 3.0).epsilon(1e-14));
}

TEST_CASE("smg step is stationary at a hull-critical point") {
  // two exactly opposing gradient fields
  auto oracle_for = [](double sign) {
    return std::make_shared<testsupport::LambdaOracle>(
        [sign](int, const Vector& x) { return sign * x[0]; },
        [sign](int, const Vector& x) {
          Vector g = Vector::Zero(x.size());
          g[0] = sign;
          return g;
        },
        [](int, const Vector& x) { return Matrix::Zero(x.size(), x.size()); },
        0.0);
  };
  MultiObjectiveProblem problem(2, 4, {oracle_for(1.0), oracle_for(-1.0)});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  const Vector x = vec2(0.7, -0.4);
  const Vector next = smg_step(eval, x, {{0}, {2}}, 0.5, 1e-10);
  CHECK((next - x).norm() == 0.0);
}

TEST_CASE("smg with q = 1 replays a textbook sgd trajectory") {
  const auto data = make_synthetic_classification(5, 50, 1, 77);
  const auto problem = make_logistic_problem(data, {1e-3});

  SmgConfig config;
  config.x0 = Vector::Constant(5, 0.1);
  config.alpha0 = 0.3;
  config.alpha_power = 0.5;
  config.batch_size = 4;
  config.seed = 5;
  config.max_iterations = 40;
  config.track_omega_true = false;
  const auto result = smg_run(problem, config);
  REQUIRE(result.trace.size() == 40);

  // independent SGD with an identical draw stream
  std::mt19937_64 rng(config.seed);
  Vector x = config.x0;
  for (int k = 0; k < 40; ++k) {
    IndexSet batch;
    for (int b = 0; b < 4; ++b)
      batch.push_back(static_cast<int>(bounded_uint(rng, 50)));
    Vector gradient = Vector::Zero(5);
    for (int j : batch) gradient += problem.component(0).gradient(j, x);
    gradient /= 4.0;
    const double alpha = 0.3 / std::pow(static_cast<double>(k + 1), 0.5);
    CHECK(result.trace[static_cast<std::size_t>(k)].point == x);
    x -= alpha * gradient;
  }
  CHECK(result.final_point == x);
}

TEST_CASE("smg traces share the schema and accounting") {
  const auto data = make_synthetic_classification(5, 60, 2, 31);
  const auto problem = make_logistic_problem(data, {1e-3, 1e-3});
  SmgConfig config;
  config.x0 = Vector::Constant(5, 0.1);
  config.batch_size = 3;
  config.budget = 600;
  config.seed = 2;
  const auto result = smg_run(problem, config);
  CHECK(result.termination == Termination::Budget);
  REQUIRE(!result.trace.empty());
  for (const auto& rec : result.trace) {
    CHECK(rec.accepted);
    CHECK(!rec.rho_sample.has_value());
    CHECK(!rec.rho_additional.has_value());
    CHECK(rec.sizes == std::vector<int>{3, 3});
  }
  // the delta column carries the nonincreasing step size
  for (std::size_t k = 1; k < result.trace.size(); ++k)
    CHECK(result.trace[k].delta <= result.trace[k - 1].delta);
  // same seed, same bytes
  const auto replay = smg_run(problem, config);
  CHECK(trace_to_csv(result.trace, 2) == trace_to_csv(replay.trace, 2));
}

TEST_CASE("deterministic full-sample trust region") {
  const auto problem =
      make_quadratic_problem({vec2(0.0, 0.0), vec2(1.0, 0.0)});
  SolverConfig config;
  config.x0 = vec2(2.0, 2.0);
  config.max_iterations = 150;
  config.fs_omega_tol = 1e-9;
  config.seed = 123;

  const auto result = deterministic_motr(problem, config);
  double best_omega = 1e300;
  for (const auto& rec : result.trace) {
    // full sample from the start: no additional-sampling column, sizes fixed
    CHECK(!rec.rho_additional.has_value());
    CHECK(rec.sizes == std::vector<int>{1, 1});
    best_omega = std::min(best_omega, *rec.omega_true);
  }
  CHECK(best_omega <= 1e-8);

  // equivalent to the adaptive run started at the full sample; the seed is
  // never consumed
  SolverConfig full = config;
  full.sampling.initial_fraction = 1.0;
  full.seed = 9999;
  const auto equivalent = run(problem, full);
  CHECK(trace_to_csv(result.trace, 2) == trace_to_csv(equivalent.trace, 2));
}

TEST_CASE("smg config validation") {
  SmgConfig config;
  config.x0 = Vector::Zero(3);
  CHECK_THROWS_AS(config.validate(2), InputError);
  config.x0 = Vector::Zero(2);
  config.alpha0 = 0.0;
  CHECK_THROWS_AS(config.validate(2), InputError);
  config.alpha0 = 0.1;
  config.batch_size = 0;
  CHECK_THROWS_AS(config.validate(2), InputError);
}
