// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "asmop/problem.hpp"
#include "asmop/types.hpp"

namespace asmop {

/// One component's training data. `features` is N x n with the intercept
/// column (constant 1) last; `labels` has one entry per row.
struct Dataset {
  Matrix features;
  Vector labels;
};

/// Deterministic two-blob classification data per component, labels in
/// {-1,+1} split half and half, trailing intercept column included.
std::vector<Dataset> make_synthetic_classification(int dimension, int samples,
                                                   int components,
                                                   std::uint64_t seed);

/// Regularized logistic regression components. Per sample:
/// log(1 + exp(-y_j x.a_j)) + (ridge_i/2)|x_hat|^2 where x_hat drops the
/// trailing intercept coordinate. Labels must be -1 or +1.
MultiObjectiveProblem make_logistic_problem(std::vector<Dataset> data,
                                            std::vector<double> ridge);

/// Least-squares components. Per sample: (x.a_j - y_j)^2 / 2.
MultiObjectiveProblem make_least_squares_problem(std::vector<Dataset> data);

/// Two components over distinct datasets: logistic (with ridge) then
/// least squares.
MultiObjectiveProblem make_mixed_problem(Dataset logistic_data, double ridge,
                                         Dataset least_squares_data);

/// q quadratics f_i(x) = |x - c_i|^2 / 2 as trivial finite sums with N = 1.
MultiObjectiveProblem make_quadratic_problem(std::vector<Vector> centers);

}  // namespace asmop
