// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "asmop/evaluator.hpp"
#include "asmop/problem_families.hpp"
#include "asmop/rng.hpp"
#include "support/oracles.hpp"

using namespace asmop;
using testsupport::central_difference;

namespace {

MeteredEvaluator make_eval(const MultiObjectiveProblem& p, CostMeter& meter,
                           bool cache = true) {
  return MeteredEvaluator(p, meter, cache);
}

}  // namespace

TEST_CASE("subsampled average over shifted parabolas") {
  const auto problem = testsupport::shifted_parabola_problem(3);
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  Vector x(1);
  x[0] = 2.0;

  const auto vg = eval.value_and_gradient(0, {0, 1, 2}, x);
  CHECK(vg.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(vg.gradient[0] == doctest::Approx(0.0).epsilon(1e-14));

  // multiset with repetition: {2,2} in 1-based sample terms
  const auto repeated = eval.value_and_gradient(0, {1, 1}, x);
  CHECK(repeated.value == doctest::Approx(0.0));
  CHECK(repeated.gradient[0] == doctest::Approx(0.0));
}

TEST_CASE("subsampled evaluation validates its inputs") {
  const auto problem = testsupport::shifted_parabola_problem(3);
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  Vector x(1);
  x[0] = 0.0;
  CHECK_THROWS_AS(eval.value(0, {}, x), InputError);
  CHECK_THROWS_AS(eval.value(0, {3}, x), InputError);
  CHECK_THROWS_AS(eval.value(0, {-1}, x), InputError);
  CHECK_THROWS_AS(eval.value(1, {0}, x), InputError);
  Vector bad(2);
  bad.setZero();
  CHECK_THROWS_AS(eval.value(0, {0}, bad), InputError);
}

TEST_CASE("non-finite values carry the offending sample") {
  auto oracle = std::make_shared<testsupport::LambdaOracle>(
      [](int j, const Vector&) {
        return j == 1 ? std::numeric_limits<double>::infinity() : 0.0;
      },
      [](int, const Vector& x) { return Vector::Zero(x.size()); },
      [](int, const Vector& x) { return Matrix::Zero(x.size(), x.size()); },
      0.0);
  MultiObjectiveProblem problem(2, 3, {oracle});
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  try {
    eval.value(0, {0, 1}, Vector::Zero(2));
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(e.component() == 0);
    CHECK(e.sample_index() == 1);
  }
}

TEST_CASE("logistic sample value and gradient at the origin") {
  Dataset d;
  d.features.resize(1, 2);
  d.features << 1.0, 0.0;
  d.labels.resize(1);
  d.labels << 1.0;
  const auto problem = make_logistic_problem({d}, {0.0});
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  const Vector x = Vector::Zero(2);
  const auto vg = eval.value_and_gradient(0, {0}, x);
  CHECK(vg.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(vg.gradient[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(vg.gradient[1] == doctest::Approx(0.0));
}

TEST_CASE("logistic rejects labels outside {-1,+1}") {
  Dataset d;
  d.features.resize(1, 2);
  d.features << 1.0, 1.0;
  d.labels.resize(1);
  d.labels << 0.5;
  CHECK_THROWS_AS(make_logistic_problem({d}, {0.0}), InputError);
}

TEST_CASE("scalarization is the max of component values") {
  std::vector<Vector> centers(2, Vector::Zero(2));
  centers[1] << 1.0, 0.0;
  const auto problem = make_quadratic_problem(centers);
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  Vector x(2);
  x << 3.0, 0.0;
  // component values 4.5 and 2
  CHECK(eval.scalarize(x, problem.full_sample_tuple()) ==
        doctest::Approx(4.5).epsilon(1e-14));

  // q = 1 scalarization equals the component value
  const auto single = make_quadratic_problem({Vector::Zero(2)});
  CostMeter m2;
  auto eval2 = make_eval(single, m2);
  CHECK(eval2.scalarize(x, single.full_sample_tuple()) ==
        doctest::Approx(4.5).epsilon(1e-14));
}

TEST_CASE("least squares closed forms") {
  Dataset d;
  d.features.resize(1, 2);
  d.features << 1.0, 0.0;
  d.labels.resize(1);
  d.labels << 0.0;
  const auto problem = make_least_squares_problem({d});
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  Vector x(2);
  x << 2.0, 0.0;
  const auto vg = eval.value_and_gradient(0, {0}, x);
  CHECK(vg.value == doctest::Approx(2.0));
  CHECK(vg.gradient[0] == doctest::Approx(2.0));
  CHECK(vg.gradient[1] == doctest::Approx(0.0));

  // interpolating point: value and gradient vanish
  Dataset d2;
  d2.features.resize(2, 2);
  d2.features << 1.0, 1.0, 2.0, 1.0;
  d2.labels.resize(2);
  d2.labels << 3.0, 5.0;
  const auto interp = make_least_squares_problem({d2});
  CostMeter m2;
  auto eval2 = make_eval(interp, m2);
  Vector sol(2);
  sol << 2.0, 1.0;  // x.a = 2*a1 + 1 matches both labels
  const auto at_sol = eval2.value_and_gradient(0, {0, 1}, sol);
  CHECK(at_sol.value == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(at_sol.gradient.norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("synthetic data is deterministic, balanced, and shaped") {
  const auto a = make_synthetic_classification(5, 100, 2, 42);
  const auto b = make_synthetic_classification(5, 100, 2, 42);
  REQUIRE(a.size() == 2);
  for (int c = 0; c < 2; ++c) {
    CHECK(a[c].features == b[c].features);
    CHECK(a[c].labels == b[c].labels);
    CHECK(a[c].features.rows() == 100);
    CHECK(a[c].features.cols() == 5);
    CHECK((a[c].features.col(4).array() == 1.0).all());
    const double positives =
        (a[c].labels.array() > 0).cast<double>().sum() / 100.0;
    CHECK(positives >= 0.4);
    CHECK(positives <= 0.6);
  }
  const auto other = make_synthetic_classification(5, 100, 2, 43);
  CHECK(a[0].features != other[0].features);

  CHECK_THROWS_AS(make_synthetic_classification(1, 100, 2, 0), InputError);
  CHECK_THROWS_AS(make_synthetic_classification(5, 5, 2, 0), InputError);
}

TEST_CASE("analytic gradients match central differences") {
  const auto data = make_synthetic_classification(6, 40, 2, 7);
  const auto logistic = make_logistic_problem(data, {1e-3, 1e-2});
  const auto least_squares = make_least_squares_problem(data);
  const auto mixed = make_mixed_problem(data[0], 1e-3, data[1]);

  std::mt19937_64 rng(11);
  const MultiObjectiveProblem* problems[] = {&logistic, &least_squares, &mixed};
  for (const auto* problem : problems) {
    for (int trial = 0; trial < 34; ++trial) {
      const Vector x = normal_vector(rng, problem->dimension());
      const int i = static_cast<int>(bounded_uint(rng, problem->num_objectives()));
      const int j =
          static_cast<int>(bounded_uint(rng, problem->samples_per_component()));
      const Vector analytic = problem->component(i).gradient(j, x);
      const Vector numeric = central_difference(
          [&](const Vector& p) { return problem->component(i).value(j, p); }, x);
      CHECK((analytic - numeric).norm() <= 1e-5 * (1.0 + analytic.norm()));
    }
  }
}

TEST_CASE("full-sample subsampled average equals the deterministic value") {
  const auto data = make_synthetic_classification(6, 50, 1, 3);
  const auto problem = make_logistic_problem(data, {1e-3});
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  std::mt19937_64 rng(5);
  const Vector x = normal_vector(rng, 6);

  const double averaged = eval.value(0, problem.full_sample_tuple()[0], x);
  double direct = 0.0;
  for (int j = 0; j < 50; ++j) direct += problem.component(0).value(j, x);
  direct /= 50.0;
  CHECK(std::abs(averaged - direct) <= 1e-12 * 50);
}

TEST_CASE("declared c_h bounds per-sample Hessian norms") {
  const auto data = make_synthetic_classification(6, 30, 2, 9);
  const auto logistic = make_logistic_problem(data, {1e-3, 1e-2});
  const auto least_squares = make_least_squares_problem(data);

  std::mt19937_64 rng(13);
  auto power_norm = [](const Matrix& h) {
    std::mt19937_64 local(99);
    Vector v = normal_vector(local, static_cast<int>(h.rows()));
    v /= v.norm();
    double est = 0.0;
    for (int s = 0; s < 50; ++s) {
      const Vector w = h * v;
      const double norm = w.norm();
      if (norm == 0.0) return 0.0;
      est = norm;
      v = w / norm;
    }
    return est;
  };

  const MultiObjectiveProblem* problems[] = {&logistic, &least_squares};
  for (const auto* problem : problems) {
    const double bound = problem->hessian_norm_bound();
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x = normal_vector(rng, problem->dimension());
      const int i = static_cast<int>(bounded_uint(rng, problem->num_objectives()));
      const int j =
          static_cast<int>(bounded_uint(rng, problem->samples_per_component()));
      CHECK(power_norm(problem->component(i).hessian(j, x)) <=
            bound * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("cost accounting: fresh points charge, cached points do not") {
  const auto data = make_synthetic_classification(4, 20, 1, 1);
  const auto problem = make_logistic_problem(data, {0.0});
  CostMeter meter;
  auto eval = make_eval(problem, meter);
  std::mt19937_64 rng(2);
  const Vector a = normal_vector(rng, 4);
  const Vector b = normal_vector(rng, 4);
  const Vector c = normal_vector(rng, 4);

  eval.value_and_gradient(0, {0, 1, 2}, a);
  CHECK(meter.scalar_products() == 3);
  eval.value(0, {0, 1, 2}, a);  // cached point, cached samples
  CHECK(meter.scalar_products() == 3);
  eval.hessian(0, {0, 1, 2}, a);  // Hessian at a cached point is free
  CHECK(meter.scalar_products() == 3);
  eval.value(0, {3}, a);  // cached point, fresh sample
  CHECK(meter.scalar_products() == 4);
  eval.value(0, {0, 0, 0}, b);  // fresh point, one distinct sample
  CHECK(meter.scalar_products() == 5);
  eval.value(0, {0}, a);  // both points still cached
  CHECK(meter.scalar_products() == 5);
  eval.value(0, {0}, c);  // third point evicts the least recently used (b)
  CHECK(meter.scalar_products() == 6);
  eval.value(0, {0}, b);
  CHECK(meter.scalar_products() == 7);

  CostMeter uncached_meter;
  auto uncached = make_eval(problem, uncached_meter, false);
  uncached.value(0, {0, 0}, a);
  uncached.value(0, {0}, a);
  CHECK(uncached_meter.scalar_products() == 3);
}
