// SPDX-License-Identifier: Apache-2.0

#include "asmop/trust_region_model.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "asmop/rng.hpp"

namespace asmop {

double spectral_norm_estimate(const Matrix& m, int steps) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 0.0;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  Vector v = normal_vector(rng, static_cast<int>(n));
  v /= v.norm();
  double estimate = 0.0;
  for (int s = 0; s < steps; ++s) {
    const Vector w = m * v;
    const double norm = w.norm();
    if (norm <= std::numeric_limits<double>::min()) return 0.0;
    estimate = norm;
    v = w / norm;
  }
  return estimate;
}

QuadraticMaxModel QuadraticMaxModel::build(MeteredEvaluator& eval, const Vector& x,
                                           const SampleTuple& samples,
                                           const ModelOptions& options) {
  const MultiObjectiveProblem& problem = eval.problem();
  const int q = problem.num_objectives();
  if (static_cast<int>(samples.size()) != q)
    throw InputError("sample tuple must have one multiset per component");
  const double c_b =
      options.c_b > 0.0 ? options.c_b : 1.0 + problem.hessian_norm_bound();
  if (c_b < 1.0) throw InputError("c_b must be at least 1");

  QuadraticMaxModel model;
  model.components_.resize(static_cast<std::size_t>(q));
  double max_norm = 0.0;
  for (int i = 0; i < q; ++i) {
    Component& comp = model.components_[static_cast<std::size_t>(i)];
    const auto vg =
        eval.value_and_gradient(i, samples[static_cast<std::size_t>(i)], x);
    comp.value = vg.value;
    comp.gradient = vg.gradient;
    switch (options.policy) {
      case HessianPolicy::Zero:
        comp.hessian_norm = 0.0;
        break;
      case HessianPolicy::ScaledIdentity:
        comp.iso_coeff = std::min(options.identity_scale, c_b - 1.0);
        comp.hessian_norm = std::abs(comp.iso_coeff);
        break;
      case HessianPolicy::Subsampled: {
        comp.hessian = eval.hessian(i, samples[static_cast<std::size_t>(i)], x);
        double est = spectral_norm_estimate(comp.hessian, options.power_steps);
        if (est > c_b - 1.0) {
          comp.hessian *= (c_b - 1.0) / est;
          est = c_b - 1.0;
        }
        comp.hessian_norm = est;
        break;
      }
    }
    max_norm = std::max(max_norm, comp.hessian_norm);
  }
  model.beta_ = 1.0 + max_norm;
  return model;
}

double QuadraticMaxModel::value(const Vector& d) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& comp : components_) {
    double v = comp.value + comp.gradient.dot(d);
    if (comp.hessian.size() > 0) v += 0.5 * d.dot(comp.hessian * d);
    if (comp.iso_coeff != 0.0) v += 0.5 * comp.iso_coeff * d.squaredNorm();
    best = std::max(best, v);
  }
  return best;
}

double QuadraticMaxModel::value_at_origin() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& comp : components_) best = std::max(best, comp.value);
  return best;
}

std::vector<Vector> QuadraticMaxModel::gradients() const {
  std::vector<Vector> out;
  out.reserve(components_.size());
  for (const auto& comp : components_) out.push_back(comp.gradient);
  return out;
}

CauchyStep cauchy_step(const QuadraticMaxModel& model, const MarginalResult& marginal,
                       double delta, bool throw_on_violation) {
  if (delta <= 0.0) throw InputError("trust-region radius must be positive");
  CauchyStep result;
  const Eigen::Index n = marginal.direction.size();
  if (marginal.omega <= 0.0 || marginal.direction.isZero(0.0)) {
    result.step = Vector::Zero(n);
    return result;
  }

  const double beta = model.beta();
  const double t_star = std::min(delta, marginal.omega / beta);
  const double m0 = model.value_at_origin();

  double best_t = t_star;
  double best_value = model.value(t_star * marginal.direction);
  for (int i = 1; i <= 16; ++i) {
    const double t = delta * static_cast<double>(i) / 16.0;
    const double v = model.value(t * marginal.direction);
    if (v < best_value) {
      best_value = v;
      best_t = t;
    }
  }

  result.step = best_t * marginal.direction;
  result.predicted_decrease = m0 - best_value;
  result.required_decrease =
      0.5 * marginal.omega * std::min(delta, marginal.omega / beta);
  const double slack = marginal.gap * std::min(delta, marginal.omega / beta) +
                       1e-12 * (1.0 + std::abs(m0));
  result.satisfies_decrease =
      result.predicted_decrease + slack >= result.required_decrease;
  if (!result.satisfies_decrease && throw_on_violation)
    throw InvariantError("Cauchy decrease violated: predicted " +
                         std::to_string(result.predicted_decrease) +
                         " < required " +
                         std::to_string(result.required_decrease));
  return result;
}

ModelErrorCheck model_error_check(MeteredEvaluator& eval, const Vector& x,
                                  const SampleTuple& samples, const Vector& d,
                                  const QuadraticMaxModel& model, double c_f,
                                  double delta) {
  ModelErrorCheck check;
  const double phi_trial = eval.scalarize(x + d, samples);
  check.lhs = std::abs(phi_trial - model.value(d));
  check.bound = c_f * delta * delta;
  check.ok = check.lhs <= check.bound * (1.0 + 1e-9) + 1e-12;
  return check;
}

}  // namespace asmop
