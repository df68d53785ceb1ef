// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "asmop/evaluator.hpp"
#include "asmop/marginal.hpp"
#include "asmop/types.hpp"

namespace asmop {

enum class HessianPolicy {
  Subsampled,      // exact subsampled Hessian, spectrally clipped to c_b - 1
  Zero,            // first-order model
  ScaledIdentity,  // fixed multiple of the identity
};

struct ModelOptions {
  HessianPolicy policy = HessianPolicy::Subsampled;
  /// Bound on beta = 1 + max_i |H_i|; <= 0 means 1 + c_h of the problem.
  double c_b = 0.0;
  double identity_scale = 1.0;
  int power_steps = 20;
};

/// Spectral norm estimate of a symmetric matrix by power iteration from a
/// fixed deterministic start vector.
double spectral_norm_estimate(const Matrix& m, int steps = 20);

/// Max-of-quadratics model of the subsampled scalarization around a point:
/// value(d) = max_i f_i + <g_i, d> + <d, H_i d>/2. Immutable after build;
/// evaluations are model-internal and charge no oracle cost.
class QuadraticMaxModel {
 public:
  struct Component {
    double value = 0.0;
    Vector gradient;
    Matrix hessian;        // empty for Zero / ScaledIdentity policies
    double iso_coeff = 0.0;  // identity multiple when hessian is empty
    double hessian_norm = 0.0;
  };

  static QuadraticMaxModel build(MeteredEvaluator& eval, const Vector& x,
                                 const SampleTuple& samples,
                                 const ModelOptions& options);

  double value(const Vector& d) const;
  double value_at_origin() const;  // = phi of the subsampled values
  double component_value(int i) const { return components_[i].value; }
  const Vector& gradient(int i) const { return components_[i].gradient; }
  std::vector<Vector> gradients() const;
  double beta() const noexcept { return beta_; }
  int num_components() const noexcept { return static_cast<int>(components_.size()); }

 private:
  std::vector<Component> components_;
  double beta_ = 1.0;
};

struct CauchyStep {
  Vector step;
  double predicted_decrease = 0.0;  // model(0) - model(step)
  double required_decrease = 0.0;   // omega/2 * min(delta, omega/beta)
  bool satisfies_decrease = true;
};

/// Step along the marginal direction: t* = min(delta, omega/beta), refined on
/// a 16-point grid over (0, delta], keeping the best model value. The result
/// must meet the Cauchy decrease bound up to the marginal gap slack; a
/// violation signals a marginal-solver failure.
CauchyStep cauchy_step(const QuadraticMaxModel& model, const MarginalResult& marginal,
                       double delta, bool throw_on_violation = true);

struct ModelErrorCheck {
  double lhs = 0.0;
  double bound = 0.0;
  bool ok = true;
};

/// Compares |phi(x + d) - model(d)| against c_f * delta^2.
ModelErrorCheck model_error_check(MeteredEvaluator& eval, const Vector& x,
                                  const SampleTuple& samples, const Vector& d,
                                  const QuadraticMaxModel& model, double c_f,
                                  double delta);

}  // namespace asmop
