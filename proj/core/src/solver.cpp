// SPDX-License-Identifier: Apache-2.0

#include "asmop/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "asmop/evaluator.hpp"
#include "asmop/marginal.hpp"

namespace asmop {

double NonmonotoneSchedule::at(int k) const {
  return scale / std::pow(static_cast<double>(k + 1), power);
}

double NonmonotoneSchedule::tail_sum(int from) const {
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  const int cutoff = from + 200000;
  for (int j = from; j < cutoff; ++j) sum += at(j);
  // Integral bound on the remainder: sum_{j >= K} (j+1)^-p <= K^(1-p)/(p-1).
  sum += scale * std::pow(static_cast<double>(cutoff), 1.0 - power) /
         (power - 1.0);
  return sum;
}

void SolverConfig::validate(int dimension) const {
  std::string issues;
  auto add = [&issues](const std::string& msg) {
    if (!issues.empty()) issues += "; ";
    issues += msg;
  };
  if (x0.size() != dimension)
    add("x0 has dimension " + std::to_string(x0.size()) + ", problem needs " +
        std::to_string(dimension));
  if (!(delta_max > 0.0)) add("delta_max must be positive");
  if (!(delta0 > 0.0 && delta0 < delta_max)) add("delta0 must lie in (0, delta_max)");
  if (!(gamma1 > 0.0 && gamma1 < 1.0)) add("gamma1 must lie in (0, 1)");
  if (!(nu > 0.0)) add("nu must be positive");
  if (!(eta > 0.0 && eta < 0.75)) add("eta must lie in (0, 3/4)");
  if (!(epsilon > 0.0)) add("epsilon must be positive");
  if (!(t.power > 1.0)) add("t_power must exceed 1 for a summable sequence");
  if (!(t_bar.power > 1.0))
    add("t_bar power must exceed 1 for a summable sequence");
  if (t.scale < 0.0) add("t_scale must be nonnegative");
  if (t_bar.scale < 0.0) add("t_bar_scale must be nonnegative");
  if (!(sampling.initial_fraction > 0.0 && sampling.initial_fraction <= 1.0))
    add("initial_sample_fraction must lie in (0, 1]");
  if (!(sampling.increment_fraction > 0.0))
    add("increment_fraction must be positive");
  if (!(sampling.geometric_factor > 1.0))
    add("geometric_factor must exceed 1");
  if (sampling.additional_size < 1) add("additional_sample_size must be >= 1");
  if (budget < 0) add("budget must be nonnegative");
  if (max_iterations < 1) add("max_iterations must be positive");
  if (fs_omega_tol < 0.0) add("fs_omega_tol must be nonnegative");
  if (marginal_tol < 0.0) add("marginal_tol must be nonnegative");
  if (model.c_b != 0.0 && model.c_b < 1.0) add("c_b must be at least 1");
  if (!issues.empty()) throw InputError("invalid solver config: " + issues);
}

double rho_sample_ratio(double phi_trial, double phi_current, double delta,
                        double t_k, double model_decrease) {
  if (!(model_decrease < 0.0))
    throw InvariantError(
        "rho_N undefined: model decrease is nonnegative (failed Cauchy step)");
  return (phi_trial - phi_current - delta * t_k) / model_decrease;
}

double rho_additional_ratio(double phi_trial, double phi_current, double delta,
                            double t_bar_k, double max_gradient_norm) {
  if (max_gradient_norm < 0.0)
    throw InputError("gradient norm must be nonnegative");
  const double numerator = phi_trial - phi_current - delta * t_bar_k;
  if (max_gradient_norm == 0.0) {
    return numerator <= 0.0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
  }
  return numerator / -max_gradient_norm;
}

double radius_update(double delta, double rho_sample, double eta, double gamma1,
                     double gamma2, double delta_max) {
  if (rho_sample >= eta) return std::min(delta_max, gamma2 * delta);
  return gamma1 * delta;
}

bool accept_trial(std::optional<double> rho_sample,
                  std::optional<double> rho_additional, bool minibatch_phase,
                  double eta, double nu) {
  if (!rho_sample) return false;
  if (minibatch_phase) {
    if (!rho_additional)
      throw InputError("rho_D is required in the mini-batch phase");
    return *rho_sample >= eta && *rho_additional >= nu;
  }
  return *rho_sample >= eta;
}

double phi_fix_value(const MultiObjectiveProblem& problem, const Vector& x,
                     CostMeter& meter) {
  const int q = problem.num_objectives();
  const int n_samples = problem.samples_per_component();
  double sum = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < q; ++i)
      best = std::max(best, problem.component(i).value(j, x));
    sum += best;
  }
  meter.add(static_cast<std::int64_t>(q) * n_samples);
  return sum / static_cast<double>(n_samples);
}

namespace {

int initial_sample_size(const SolverConfig& config, int full_size) {
  const int size = static_cast<int>(
      std::lround(config.sampling.initial_fraction * full_size));
  return std::clamp(size, 1, full_size);
}

}  // namespace

RunResult run(const MultiObjectiveProblem& problem, const SolverConfig& config) {
  config.validate(problem.dimension());
  const int q = problem.num_objectives();
  const int n_samples = problem.samples_per_component();
  const double tol =
      config.marginal_tol > 0.0 ? config.marginal_tol : default_marginal_tol(q);
  const double c_h = problem.hessian_norm_bound();
  const double c_b = config.model.c_b > 0.0 ? config.model.c_b : 1.0 + c_h;
  const double c_f = 0.5 * (c_h + c_b);
  ModelOptions model_options = config.model;
  model_options.c_b = c_b;

  CostMeter meter;
  CostMeter diagnostics;
  MeteredEvaluator eval(problem, meter, true);
  MeteredEvaluator diag_eval(problem, diagnostics, false);

  SampleState state(q, n_samples, initial_sample_size(config, n_samples),
                    config.seed);

  RunResult result;
  result.num_objectives = q;
  result.samples_per_component = n_samples;
  result.termination = Termination::MaxIterations;

  Vector x = config.x0;
  double delta = config.delta0;

  for (int k = 0;; ++k) {
    if (k >= config.max_iterations) {
      result.termination = Termination::MaxIterations;
      break;
    }
    if (config.budget > 0 && meter.scalar_products() >= config.budget) {
      result.termination = Termination::Budget;
      break;
    }

    // Step 1: model, approximate marginal, candidate direction.
    const QuadraticMaxModel model =
        QuadraticMaxModel::build(eval, x, state.tuple(), model_options);
    const MarginalResult marginal = min_norm_point(model.gradients(), tol);
    const double phi_current = model.value_at_origin();
    const bool minibatch = !state.full_sample_phase();

    IterateRecord rec;
    rec.k = k;
    rec.delta = delta;
    rec.omega_sub = marginal.omega;
    rec.sizes = state.sizes();
    rec.phi_sub = phi_current;
    rec.point = x;
    if (config.track_omega_true)
      rec.omega_true = marginal_true(diag_eval, x, tol).omega;
    if (config.track_phi_fix)
      rec.phi_fix = phi_fix_value(problem, x, diagnostics);

    if (!minibatch && config.fs_omega_tol > 0.0 &&
        marginal.omega <= config.fs_omega_tol) {
      state.note_iteration();
      rec.cost = meter.scalar_products();
      result.trace.push_back(std::move(rec));
      result.termination = Termination::Critical;
      break;
    }

    CauchyStep step;
    if (marginal.omega > tol) {
      step = cauchy_step(model, marginal, delta, config.strict_checks);
      if (!step.satisfies_decrease) ++result.cauchy_violations;
    } else {
      step.step = Vector::Zero(x.size());
    }

    // No usable candidate: either a subsampled critical point, or the
    // predicted decrease fell below what doubles resolve at this scale.
    if (!(step.predicted_decrease > 0.0)) {
      if (minibatch) {
        const AdditionalSample additional =
            state.draw_additional(config.sampling.additional_size);
        double phi_additional = -std::numeric_limits<double>::infinity();
        double max_grad_norm = 0.0;
        for (int i = 0; i < q; ++i) {
          if (additional.forced_full[static_cast<std::size_t>(i)]) {
            phi_additional = std::max(phi_additional, model.component_value(i));
            max_grad_norm = std::max(max_grad_norm, model.gradient(i).norm());
          } else {
            const auto vg = eval.value_and_gradient(
                i, additional.indices[static_cast<std::size_t>(i)], x);
            phi_additional = std::max(phi_additional, vg.value);
            max_grad_norm = std::max(max_grad_norm, vg.gradient.norm());
          }
        }
        // The trial point equals the iterate, so both phi_D values coincide.
        rec.rho_additional =
            rho_additional_ratio(phi_additional, phi_additional, delta,
                                 config.t_bar.at(k), max_grad_norm);
        rec.branches = state.step2_update(
            {marginal.omega, rec.rho_additional, std::nullopt, config.epsilon,
             config.nu, config.eta},
            config.sampling);
      }
      state.note_iteration();
      rec.cost = meter.scalar_products();
      result.trace.push_back(std::move(rec));
      continue;
    }

    const Vector x_trial = x + step.step;
    rec.predicted_decrease = step.predicted_decrease;

    std::vector<double> trial_values(static_cast<std::size_t>(q));
    double phi_trial = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < q; ++i) {
      trial_values[static_cast<std::size_t>(i)] =
          eval.value(i, state.multiset(i), x_trial);
      phi_trial = std::max(phi_trial, trial_values[static_cast<std::size_t>(i)]);
    }
    rec.phi_trial = phi_trial;
    rec.rho_sample = rho_sample_ratio(phi_trial, phi_current, delta,
                                      config.t.at(k), -step.predicted_decrease);

    const ModelErrorCheck error_check = model_error_check(
        eval, x, state.tuple(), step.step, model, c_f, delta);
    if (!error_check.ok) {
      ++result.model_error_violations;
      if (config.strict_checks)
        throw InvariantError("model error bound violated at iteration " +
                             std::to_string(k));
    }

    // Step 2: additional sampling and the sample-size cascade.
    if (minibatch) {
      const AdditionalSample additional =
          state.draw_additional(config.sampling.additional_size);
      double phi_additional_current = -std::numeric_limits<double>::infinity();
      double phi_additional_trial = -std::numeric_limits<double>::infinity();
      double max_grad_norm = 0.0;
      for (int i = 0; i < q; ++i) {
        if (additional.forced_full[static_cast<std::size_t>(i)]) {
          phi_additional_current =
              std::max(phi_additional_current, model.component_value(i));
          phi_additional_trial = std::max(
              phi_additional_trial, trial_values[static_cast<std::size_t>(i)]);
          max_grad_norm = std::max(max_grad_norm, model.gradient(i).norm());
        } else {
          const auto& indices = additional.indices[static_cast<std::size_t>(i)];
          const auto vg = eval.value_and_gradient(i, indices, x);
          phi_additional_current = std::max(phi_additional_current, vg.value);
          phi_additional_trial =
              std::max(phi_additional_trial, eval.value(i, indices, x_trial));
          max_grad_norm = std::max(max_grad_norm, vg.gradient.norm());
        }
      }
      rec.rho_additional =
          rho_additional_ratio(phi_additional_trial, phi_additional_current,
                               delta, config.t_bar.at(k), max_grad_norm);
      rec.branches = state.step2_update(
          {marginal.omega, rec.rho_additional, rec.rho_sample, config.epsilon,
           config.nu, config.eta},
          config.sampling);
    }

    // Steps 3 and 4: iterate and radius updates.
    rec.accepted =
        accept_trial(rec.rho_sample, rec.rho_additional, minibatch, config.eta,
                     config.nu);
    if (rec.accepted) x = x_trial;
    delta = radius_update(delta, *rec.rho_sample, config.eta, config.gamma1,
                          config.gamma2(), config.delta_max);

    state.note_iteration();
    rec.cost = meter.scalar_products();
    result.trace.push_back(std::move(rec));
  }

  result.final_point = x;
  result.scalar_products = meter.scalar_products();
  result.diagnostic_scalar_products = diagnostics.scalar_products();
  return result;
}

LevelBoundReport check_fs_level_bound(const RunResult& result,
                                      const SolverConfig& config) {
  LevelBoundReport report;
  const int full = result.samples_per_component;
  int k1 = -1;
  for (std::size_t idx = 0; idx < result.trace.size(); ++idx) {
    const auto& sizes = result.trace[idx].sizes;
    if (std::all_of(sizes.begin(), sizes.end(),
                    [full](int s) { return s == full; })) {
      k1 = static_cast<int>(idx);
      break;
    }
  }
  if (k1 < 0) return report;
  report.applicable = true;
  report.start_iteration = result.trace[static_cast<std::size_t>(k1)].k;
  const double phi_ref = result.trace[static_cast<std::size_t>(k1)].phi_sub;
  const double allowance =
      config.delta_max * config.t.tail_sum(report.start_iteration) + 1e-9;
  for (std::size_t idx = static_cast<std::size_t>(k1); idx < result.trace.size();
       ++idx) {
    const double excess = result.trace[idx].phi_sub - phi_ref - allowance;
    report.max_excess = std::max(report.max_excess, excess);
  }
  report.ok = report.max_excess <= 0.0;
  return report;
}

LevelBoundReport check_mb_level_bound(const RunResult& result,
                                      const SolverConfig& config) {
  LevelBoundReport report;
  // k' = first iteration after the last additional-sampling rejection.
  int k_start = 0;
  bool any_test = false;
  for (std::size_t idx = 0; idx < result.trace.size(); ++idx) {
    const auto& rec = result.trace[idx];
    if (!rec.rho_additional) continue;
    any_test = true;
    if (*rec.rho_additional < config.nu) k_start = static_cast<int>(idx) + 1;
  }
  if (!any_test || k_start >= static_cast<int>(result.trace.size())) return report;
  for (const auto& rec : result.trace)
    if (!rec.phi_fix) return report;  // needs phi_fix tracking

  report.applicable = true;
  report.start_iteration = result.trace[static_cast<std::size_t>(k_start)].k;
  const double phi_ref = *result.trace[static_cast<std::size_t>(k_start)].phi_fix;
  const double allowance =
      config.delta_max * config.t_bar.tail_sum(report.start_iteration) + 1e-9;
  for (std::size_t idx = static_cast<std::size_t>(k_start);
       idx < result.trace.size(); ++idx) {
    const double excess = *result.trace[idx].phi_fix - phi_ref - allowance;
    report.max_excess = std::max(report.max_excess, excess);
  }
  report.ok = report.max_excess <= 0.0;
  return report;
}

}  // namespace asmop
