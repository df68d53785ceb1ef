// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "asmop/evaluator.hpp"
#include "asmop/types.hpp"

namespace asmop {

/// Solution of the marginal min-norm problem: omega is the norm of the
/// minimum-norm element of the convex hull of the component gradients,
/// weights its hull coefficients, direction the common descent direction
/// (zero when omega vanishes). gap bounds max_i <g_i, direction> + omega.
struct MarginalResult {
  double omega = 0.0;
  Vector weights;
  Vector direction;
  double gap = 0.0;
};

/// Default solver tolerance: the two-component case uses a closed form.
double default_marginal_tol(int num_objectives);

/// Euclidean projection of v onto the unit simplex.
Vector project_to_simplex(const Vector& v);

/// Minimum-norm point of conv{gradients}. q = 1 is trivial, q = 2 projects
/// the origin onto the segment in closed form, q >= 3 runs projected
/// gradient on the simplex until the duality gap falls below tol (with a
/// support polish when the active set has settled).
MarginalResult min_norm_point(const std::vector<Vector>& gradients, double tol);

/// Marginal function from full-sample gradients. Route the evaluator through
/// a diagnostics meter to keep this out of the reported algorithm cost.
MarginalResult marginal_true(MeteredEvaluator& eval, const Vector& x, double tol);

/// Marginal function from subsampled gradients (one multiset per component).
MarginalResult marginal_subsampled(MeteredEvaluator& eval, const Vector& x,
                                   const SampleTuple& samples, double tol);

}  // namespace asmop
