// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asmop/cost_meter.hpp"
#include "asmop/problem.hpp"
#include "asmop/sampling.hpp"
#include "asmop/trust_region_model.hpp"
#include "asmop/types.hpp"

namespace asmop {

/// Summable relaxation sequence c / (k+1)^p with p > 1.
struct NonmonotoneSchedule {
  double scale = 1.0;
  double power = 1.1;

  double at(int k) const;
  /// Upper bound on the tail sum from iteration `from` on.
  double tail_sum(int from) const;
};

struct SolverConfig {
  Vector x0;

  double delta0 = 1.0;
  double delta_max = 8.0;
  double gamma1 = 0.5;   // gamma2 is pinned to 1/gamma1
  double nu = 1e-4;
  double eta = 0.25;     // must stay in (0, 3/4)
  double epsilon = 1e-5;

  NonmonotoneSchedule t;      // t_k
  NonmonotoneSchedule t_bar;  // t-bar_k

  SamplingConfig sampling;
  ModelOptions model;

  std::int64_t budget = 0;    // scalar products; 0 disables the budget stop
  int max_iterations = 100000;
  double fs_omega_tol = 0.0;  // full-sample stop on omega; 0 disables
  double marginal_tol = 0.0;  // 0 picks the per-q default

  std::uint64_t seed = 0;

  bool strict_checks = false;   // throw on a violated in-loop bound
  bool track_omega_true = true; // per-iteration true marginal (diagnostics meter)
  bool track_phi_fix = false;   // per-iteration Phi_fix (diagnostics meter)

  double gamma2() const { return 1.0 / gamma1; }
  /// Throws InputError listing every violated range.
  void validate(int dimension) const;
};

enum class Termination { Budget, MaxIterations, Critical };

/// One row of the run trace. The CSV schema covers the fields up to phi_sub;
/// the remaining fields are in-memory diagnostics.
struct IterateRecord {
  int k = 0;
  std::int64_t cost = 0;
  double delta = 0.0;
  double omega_sub = 0.0;
  std::optional<double> omega_true;
  std::optional<double> rho_sample;      // rho_N; absent when no candidate step
  std::optional<double> rho_additional;  // rho_D; present iff mini-batch phase
  bool accepted = false;
  std::vector<int> sizes;                // N_k^i
  double phi_sub = 0.0;

  // diagnostics, not part of the CSV schema
  std::optional<double> phi_trial;
  std::optional<double> predicted_decrease;
  std::optional<double> phi_fix;
  std::vector<Step2Branch> branches;
  Vector point;  // x_k
};

struct RunResult {
  Vector final_point;
  std::vector<IterateRecord> trace;
  Termination termination = Termination::MaxIterations;
  std::int64_t scalar_products = 0;
  std::int64_t diagnostic_scalar_products = 0;
  int cauchy_violations = 0;
  int model_error_violations = 0;
  int num_objectives = 0;
  int samples_per_component = 0;
};

/// rho_N of the trust-region test. model_decrease = m(d) - m(0) must be
/// negative; a nonnegative value signals a failed Cauchy step.
double rho_sample_ratio(double phi_trial, double phi_current, double delta,
                        double t_k, double model_decrease);

/// rho_D of the additional-sampling test. A zero gradient norm degenerates to
/// +inf when the numerator is nonpositive and -inf otherwise, which keeps the
/// Armijo-like acceptance reading intact.
double rho_additional_ratio(double phi_trial, double phi_current, double delta,
                            double t_bar_k, double max_gradient_norm);

/// Step-4 radius rule.
double radius_update(double delta, double rho_sample, double eta, double gamma1,
                     double gamma2, double delta_max);

/// Step-3 acceptance: both ratios in the mini-batch phase, rho_N alone in the
/// full-sample phase.
bool accept_trial(std::optional<double> rho_sample,
                  std::optional<double> rho_additional, bool minibatch_phase,
                  double eta, double nu);

/// Runs the adaptive-sampling trust-region loop to its stopping rule.
RunResult run(const MultiObjectiveProblem& problem, const SolverConfig& config);

/// Phi_fix(x) = (1/N) sum_j max_i f^i_j(x); diagnostic, charges `meter`.
double phi_fix_value(const MultiObjectiveProblem& problem, const Vector& x,
                     CostMeter& meter);

struct LevelBoundReport {
  bool applicable = false;
  bool ok = true;
  int start_iteration = -1;
  double max_excess = 0.0;
};

/// Once the full sample is reached at k1, phi(x_k) must stay within
/// delta_max * tail(t, k1) of phi(x_k1).
LevelBoundReport check_fs_level_bound(const RunResult& result,
                                      const SolverConfig& config);

/// After the last additional-sampling rejection, Phi_fix(x_k) must stay
/// within delta_max * tail(t_bar, k') of Phi_fix(x_k'). Needs phi_fix
/// tracking; skipped when no such k' exists.
LevelBoundReport check_mb_level_bound(const RunResult& result,
                                      const SolverConfig& config);

}  // namespace asmop
