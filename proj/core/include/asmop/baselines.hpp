// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "asmop/evaluator.hpp"
#include "asmop/solver.hpp"
#include "asmop/types.hpp"

namespace asmop {

/// Stochastic multi-gradient configuration. The step-size schedule
/// alpha0 / (k+1)^alpha_power and the batch size are not pinned by theory;
/// every comparison records the values used.
struct SmgConfig {
  Vector x0;
  double alpha0 = 0.1;
  double alpha_power = 0.5;
  int batch_size = 32;
  std::uint64_t seed = 0;
  std::int64_t budget = 0;
  int max_iterations = 100000;
  double marginal_tol = 0.0;
  bool track_omega_true = true;

  void validate(int dimension) const;
};

/// One SMG update: min-norm convex combination g of the subsampled gradients,
/// then x - alpha * g.
Vector smg_step(MeteredEvaluator& eval, const Vector& x,
                const SampleTuple& batches, double alpha, double tol);

/// SMG loop with fresh uniform batches each iteration; shares the trace
/// format (the delta column records the step size, rows are always accepted).
RunResult smg_run(const MultiObjectiveProblem& problem, const SmgConfig& config);

/// Full-sample deterministic trust region: the adaptive run started at
/// N_0^i = N, which never computes an additional-sampling ratio.
RunResult deterministic_motr(const MultiObjectiveProblem& problem,
                             const SolverConfig& config);

}  // namespace asmop
