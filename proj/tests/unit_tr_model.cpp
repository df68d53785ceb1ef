// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "asmop/problem_families.hpp"
#include "asmop/rng.hpp"
#include "asmop/trust_region_model.hpp"
#include "support/oracles.hpp"

using namespace asmop;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

// dense scan of the model along a direction, the refinement oracle
double best_on_dense_grid(const QuadraticMaxModel& model, const Vector& dir,
                          double delta) {
  double best = model.value_at_origin();
  for (int i = 1; i <= 4000; ++i) {
    const double t = delta * static_cast<double>(i) / 4000.0;
    best = std::min(best, model.value(t * dir));
  }
  return best;
}

}  // namespace

TEST_CASE("model value at the origin and along steps") {
  const auto problem = make_quadratic_problem({Vector::Zero(2)});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  const Vector x = vec2(2.0, 0.0);
  const auto model =
      QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), {});

  CHECK(model.value_at_origin() == doctest::Approx(2.0));  // phi at x
  CHECK(model.value(Vector::Zero(2)) == doctest::Approx(2.0));
  // f=2, g=(2,0), H=I: step (-1,0) gives 2 - 2 + 0.5
  CHECK(model.value(vec2(-1.0, 0.0)) == doctest::Approx(0.5));
  CHECK(model.beta() == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("two-component model takes the max") {
  // f1 = <(1,0),d>, f2 = <(0,1),d> at values 0, no curvature
  auto oracle_for = [](Vector g) {
    return std::make_shared<testsupport::LambdaOracle>(
        [g](int, const Vector& x) { return g.dot(x); },
        [g](int, const Vector&) { return g; },
        [](int, const Vector& x) { return Matrix::Zero(x.size(), x.size()); },
        0.0);
  };
  MultiObjectiveProblem problem(
      2, 1, {oracle_for(vec2(1.0, 0.0)), oracle_for(vec2(0.0, 1.0))});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  ModelOptions options;
  options.policy = HessianPolicy::Zero;
  const auto model = QuadraticMaxModel::build(eval, Vector::Zero(2),
                                              problem.full_sample_tuple(), options);
  const double root_half = std::sqrt(2.0) / 2.0;
  CHECK(model.value(vec2(-root_half, -root_half)) ==
        doctest::Approx(-root_half).epsilon(1e-12));
  CHECK(model.beta() == doctest::Approx(1.0));
}

TEST_CASE("cauchy step on the scalar quadratic") {
  const auto problem = make_quadratic_problem({Vector::Zero(2)});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  const Vector x = vec2(2.0, 0.0);
  const auto model =
      QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), {});
  const auto marginal = min_norm_point(model.gradients(), 1e-10);
  REQUIRE(marginal.omega == doctest::Approx(2.0));

  SUBCASE("radius 10: the interior optimum wins") {
    const auto step = cauchy_step(model, marginal, 10.0);
    // pure Cauchy length is min(10, 2/2) = 1 with decrease 1.5; the grid
    // refinement may do better but never worse
    CHECK(step.predicted_decrease >= 1.5 - 1e-12);
    CHECK(step.required_decrease == doctest::Approx(1.0));
    CHECK(step.satisfies_decrease);
    CHECK(step.step.norm() <= 10.0 + 1e-12);
    // the dense scan bounds any refinement from above
    const double dense_best =
        model.value_at_origin() - best_on_dense_grid(model, marginal.direction, 10.0);
    CHECK(step.predicted_decrease <= dense_best + 1e-9);
  }

  SUBCASE("radius 0.5 caps the step") {
    const auto step = cauchy_step(model, marginal, 0.5);
    CHECK(step.step.norm() <= 0.5 + 1e-12);
    CHECK(step.predicted_decrease >= 0.875 - 1e-12);
    CHECK(step.required_decrease == doctest::Approx(0.5));
    CHECK(step.satisfies_decrease);
  }
}

TEST_CASE("cauchy step at a critical model is zero") {
  const auto problem = make_quadratic_problem({Vector::Zero(2)});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  const auto model = QuadraticMaxModel::build(eval, Vector::Zero(2),
                                              problem.full_sample_tuple(), {});
  const auto marginal = min_norm_point(model.gradients(), 1e-10);
  const auto step = cauchy_step(model, marginal, 1.0);
  CHECK(step.step.norm() == 0.0);
  CHECK(step.predicted_decrease == 0.0);
}

TEST_CASE("cauchy decrease holds on random subsampled models") {
  const auto data = make_synthetic_classification(6, 60, 2, 5);
  const auto problem = make_logistic_problem(data, {1e-3, 1e-2});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Vector x = normal_vector(rng, 6);
    SampleTuple tuple(2);
    for (auto& set : tuple)
      for (int c = 0; c < 8; ++c)
        set.push_back(static_cast<int>(bounded_uint(rng, 60)));
    const auto model = QuadraticMaxModel::build(eval, x, tuple, {});
    const auto marginal = min_norm_point(model.gradients(), 1e-10);
    const double delta = 0.1 + 4.0 * uniform_unit(rng);
    const auto step = cauchy_step(model, marginal, delta);
    CHECK(step.satisfies_decrease);
    CHECK(step.step.norm() <= delta * (1.0 + 1e-12));
    // the refined step is never worse than the pure Cauchy step
    if (marginal.omega > 0.0) {
      const double t_star = std::min(delta, marginal.omega / model.beta());
      CHECK(model.value(step.step) <=
            model.value(t_star * marginal.direction) + 1e-12);
    }
    // predicted decrease recomputes exactly from model values
    const double recomputed = model.value_at_origin() - model.value(step.step);
    CHECK(std::abs(recomputed - step.predicted_decrease) <=
          1e-12 * (1.0 + std::abs(recomputed)));
  }
}

TEST_CASE("beta respects the configured bound") {
  const auto data = make_synthetic_classification(6, 40, 2, 8);
  const auto problem = make_least_squares_problem(data);
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  ModelOptions options;
  options.c_b = 1.5;  // force clipping well below c_h
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = normal_vector(rng, 6);
    const auto model =
        QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), options);
    CHECK(model.beta() <= 1.5 + 1e-12);
  }
}

TEST_CASE("spectral norm estimate on a known matrix") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 4.0;
  m(1, 1) = -7.0;
  m(2, 2) = 2.0;
  CHECK(spectral_norm_estimate(m, 60) == doctest::Approx(7.0).epsilon(1e-6));
  CHECK(spectral_norm_estimate(Matrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("model error check") {
  SUBCASE("zero step is exact") {
    const auto problem = make_quadratic_problem({Vector::Zero(2)});
    CostMeter meter;
    MeteredEvaluator eval(problem, meter);
    const Vector x = vec2(1.0, 1.0);
    const auto model =
        QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), {});
    const auto check = model_error_check(eval, x, problem.full_sample_tuple(),
                                         Vector::Zero(2), model, 1.0, 0.5);
    CHECK(check.lhs <= 1e-12);
    CHECK(check.ok);
  }

  SUBCASE("exact Hessians make quadratics exact") {
    const auto problem =
        make_quadratic_problem({vec2(0.0, 0.0), vec2(1.0, 0.0)});
    CostMeter meter;
    MeteredEvaluator eval(problem, meter);
    const Vector x = vec2(2.0, -1.0);
    const auto model =
        QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), {});
    const auto check = model_error_check(eval, x, problem.full_sample_tuple(),
                                         vec2(-0.5, 0.25), model, 1.0, 0.6);
    CHECK(check.lhs <= 1e-10);
    CHECK(check.ok);
  }

  SUBCASE("logistic models stay within the Taylor bound") {
    const auto data = make_synthetic_classification(6, 50, 2, 12);
    const auto problem = make_logistic_problem(data, {1e-3, 1e-3});
    const double c_h = problem.hessian_norm_bound();
    const double c_b = 1.0 + c_h;
    const double c_f = 0.5 * (c_h + c_b);
    CostMeter meter;
    MeteredEvaluator eval(problem, meter);
    std::mt19937_64 rng(77);
    const double delta = 0.5;
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = normal_vector(rng, 6);
      const Vector d = delta * unit_sphere_vector(rng, 6);
      const auto model =
          QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), {});
      const auto check = model_error_check(eval, x, problem.full_sample_tuple(),
                                           d, model, c_f, delta);
      CHECK(check.ok);
    }
  }
}

TEST_CASE("hessian policies") {
  const auto data = make_synthetic_classification(5, 30, 1, 2);
  const auto problem = make_logistic_problem(data, {1e-3});
  CostMeter meter;
  MeteredEvaluator eval(problem, meter);
  std::mt19937_64 rng(4);
  const Vector x = normal_vector(rng, 5);
  const Vector d = 0.3 * unit_sphere_vector(rng, 5);

  ModelOptions zero;
  zero.policy = HessianPolicy::Zero;
  const auto first_order =
      QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), zero);
  CHECK(first_order.beta() == 1.0);
  const double linear = first_order.component_value(0) +
                        first_order.gradient(0).dot(d);
  CHECK(first_order.value(d) == doctest::Approx(linear).epsilon(1e-14));

  ModelOptions iso;
  iso.policy = HessianPolicy::ScaledIdentity;
  iso.identity_scale = 0.7;
  const auto identity =
      QuadraticMaxModel::build(eval, x, problem.full_sample_tuple(), iso);
  CHECK(identity.value(d) ==
        doctest::Approx(linear + 0.35 * d.squaredNorm()).epsilon(1e-12));
}
