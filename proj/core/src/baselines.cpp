// SPDX-License-Identifier: Apache-2.0

#include "asmop/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "asmop/marginal.hpp"
#include "asmop/rng.hpp"

namespace asmop {

void SmgConfig::validate(int dimension) const {
  if (x0.size() != dimension)
    throw InputError("smg x0 has dimension " + std::to_string(x0.size()) +
                     ", problem needs " + std::to_string(dimension));
  if (!(alpha0 > 0.0)) throw InputError("smg alpha0 must be positive");
  if (alpha_power < 0.0) throw InputError("smg alpha_power must be nonnegative");
  if (batch_size < 1) throw InputError("smg batch_size must be positive");
  if (budget < 0) throw InputError("smg budget must be nonnegative");
  if (max_iterations < 1) throw InputError("smg max_iterations must be positive");
}

Vector smg_step(MeteredEvaluator& eval, const Vector& x,
                const SampleTuple& batches, double alpha, double tol) {
  const int q = eval.problem().num_objectives();
  if (static_cast<int>(batches.size()) != q)
    throw InputError("one batch per component required");
  std::vector<Vector> gradients;
  gradients.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    gradients.push_back(
        eval.value_and_gradient(i, batches[static_cast<std::size_t>(i)], x).gradient);
  const MarginalResult marginal = min_norm_point(gradients, tol);
  Vector combined = Vector::Zero(x.size());
  for (int i = 0; i < q; ++i)
    combined += marginal.weights[i] * gradients[static_cast<std::size_t>(i)];
  return x - alpha * combined;
}

RunResult smg_run(const MultiObjectiveProblem& problem, const SmgConfig& config) {
  config.validate(problem.dimension());
  const int q = problem.num_objectives();
  const int n_samples = problem.samples_per_component();
  const double tol =
      config.marginal_tol > 0.0 ? config.marginal_tol : default_marginal_tol(q);

  CostMeter meter;
  CostMeter diagnostics;
  MeteredEvaluator eval(problem, meter, true);
  MeteredEvaluator diag_eval(problem, diagnostics, false);
  std::mt19937_64 rng(config.seed);

  RunResult result;
  result.num_objectives = q;
  result.samples_per_component = n_samples;
  result.termination = Termination::MaxIterations;

  Vector x = config.x0;
  for (int k = 0;; ++k) {
    if (k >= config.max_iterations) {
      result.termination = Termination::MaxIterations;
      break;
    }
    if (config.budget > 0 && meter.scalar_products() >= config.budget) {
      result.termination = Termination::Budget;
      break;
    }

    SampleTuple batches(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
      auto& batch = batches[static_cast<std::size_t>(i)];
      batch.reserve(static_cast<std::size_t>(config.batch_size));
      for (int b = 0; b < config.batch_size; ++b)
        batch.push_back(static_cast<int>(
            bounded_uint(rng, static_cast<std::uint64_t>(n_samples))));
    }

    const double alpha =
        config.alpha0 / std::pow(static_cast<double>(k + 1), config.alpha_power);

    std::vector<Vector> gradients;
    gradients.reserve(static_cast<std::size_t>(q));
    double phi_batch = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < q; ++i) {
      const auto vg =
          eval.value_and_gradient(i, batches[static_cast<std::size_t>(i)], x);
      gradients.push_back(vg.gradient);
      phi_batch = std::max(phi_batch, vg.value);
    }
    const MarginalResult marginal = min_norm_point(gradients, tol);
    Vector combined = Vector::Zero(x.size());
    for (int i = 0; i < q; ++i)
      combined += marginal.weights[i] * gradients[static_cast<std::size_t>(i)];

    IterateRecord rec;
    rec.k = k;
    rec.delta = alpha;
    rec.omega_sub = marginal.omega;
    rec.accepted = true;
    rec.sizes.assign(static_cast<std::size_t>(q), config.batch_size);
    rec.phi_sub = phi_batch;
    rec.point = x;
    if (config.track_omega_true)
      rec.omega_true = marginal_true(diag_eval, x, tol).omega;

    x -= alpha * combined;
    rec.cost = meter.scalar_products();
    result.trace.push_back(std::move(rec));
  }

  result.final_point = x;
  result.scalar_products = meter.scalar_products();
  result.diagnostic_scalar_products = diagnostics.scalar_products();
  return result;
}

RunResult deterministic_motr(const MultiObjectiveProblem& problem,
                             const SolverConfig& config) {
  SolverConfig full = config;
  full.sampling.initial_fraction = 1.0;
  return run(problem, full);
}

}  // namespace asmop
