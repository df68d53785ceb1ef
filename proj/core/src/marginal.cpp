// SPDX-License-Identifier: Apache-2.0

#include "asmop/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "asmop/trust_region_model.hpp"

namespace asmop {

double default_marginal_tol(int num_objectives) {
  return num_objectives <= 2 ? 1e-10 : 1e-8;
}

Vector project_to_simplex(const Vector& v) {
  const int q = static_cast<int>(v.size());
  std::vector<double> u(v.data(), v.data() + q);
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0;
  double tau = 0.0;
  for (int j = 0; j < q; ++j) {
    running += u[static_cast<std::size_t>(j)];
    const double t = (running - 1.0) / static_cast<double>(j + 1);
    if (u[static_cast<std::size_t>(j)] - t > 0.0) tau = t;
  }
  Vector out(q);
  for (int i = 0; i < q; ++i) out[i] = std::max(0.0, v[i] - tau);
  return out;
}

namespace {

Vector weights_q2(const Vector& g1, const Vector& g2) {
  Vector w(2);
  const double denom = (g1 - g2).squaredNorm();
  if (denom == 0.0) {
    w << 1.0, 0.0;
    return w;
  }
  const double lambda = std::clamp((g2 - g1).dot(g2) / denom, 0.0, 1.0);
  w << lambda, 1.0 - lambda;
  return w;
}

// Affine minimizer of w'Qw over sum(w_S) = 1 restricted to a support set.
std::optional<Vector> affine_minimizer(const Matrix& gram,
                                       const std::vector<int>& support) {
  const int s = static_cast<int>(support.size());
  Matrix kkt = Matrix::Zero(s + 1, s + 1);
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b)
      kkt(a, b) = gram(support[static_cast<std::size_t>(a)],
                       support[static_cast<std::size_t>(b)]);
    kkt(a, s) = 1.0;
    kkt(s, a) = 1.0;
  }
  Vector rhs = Vector::Zero(s + 1);
  rhs[s] = 1.0;
  Vector sol = kkt.fullPivLu().solve(rhs);
  if (!sol.allFinite()) return std::nullopt;
  Vector out = Vector::Zero(gram.rows());
  for (int a = 0; a < s; ++a) out[support[static_cast<std::size_t>(a)]] = sol[a];
  return out;
}

// Active-set finisher: moves the projected-gradient iterate to the exact
// minimum-norm weights (minor cycles drop vertices whose affine weight goes
// negative, the outer loop adds the most violating vertex).
Vector polish_active_set(const Matrix& gram, Vector w) {
  const int q = static_cast<int>(gram.rows());
  const double scale = std::max(1.0, gram.diagonal().maxCoeff());
  std::vector<int> support;
  for (int i = 0; i < q; ++i)
    if (w[i] > 1e-12) support.push_back(i);
  if (support.empty()) return w;

  const Vector fallback = w;
  const int max_outer = 4 * q + 8;
  for (int outer = 0; outer < max_outer; ++outer) {
    // minor cycles: walk toward the affine minimizer, dropping vertices
    for (int minor = 0; minor <= q; ++minor) {
      const auto affine = affine_minimizer(gram, support);
      if (!affine) return fallback;
      const Vector& z = *affine;
      if (z.minCoeff() >= -1e-14) {
        w = z.cwiseMax(0.0);
        w /= w.sum();
        break;
      }
      double theta = 1.0;
      for (int i : support) {
        if (z[i] < 1e-14 && w[i] > z[i])
          theta = std::min(theta, w[i] / (w[i] - z[i]));
      }
      w = w + theta * (z - w);
      std::vector<int> kept;
      for (int i : support)
        if (w[i] > 1e-14) kept.push_back(i);
      if (kept.empty() || kept.size() == support.size()) return fallback;
      support = std::move(kept);
    }
    const Vector gw = gram * w;
    const double obj = w.dot(gw);
    int entering = 0;
    for (int i = 1; i < q; ++i)
      if (gw[i] < gw[entering]) entering = i;
    if (gw[entering] >= obj - 1e-13 * scale) break;  // KKT holds everywhere
    if (std::find(support.begin(), support.end(), entering) != support.end())
      break;
    support.push_back(entering);
  }
  return w;
}

// Accelerated projected gradient on the simplex for min |G w|^2 (q >= 3),
// restarted on objective increase, followed by a support polish.
Vector weights_pg(const Matrix& g, double tol, int max_iters) {
  const int q = static_cast<int>(g.cols());
  const Matrix gram = g.transpose() * g;
  const double lip = std::max(spectral_norm_estimate(gram, 60),
                              std::numeric_limits<double>::min());
  const double step = 1.0 / (1.01 * lip);

  Vector w = Vector::Constant(q, 1.0 / q);
  Vector momentum = w;
  double theta = 1.0;
  double best_obj = w.dot(gram * w);
  Vector best = w;
  double prev_obj = best_obj;
  for (int it = 0; it < max_iters; ++it) {
    const Vector gw = gram * w;
    const double obj = w.dot(gw);
    if (obj < best_obj) {
      best_obj = obj;
      best = w;
    }
    const double omega = std::sqrt(std::max(0.0, obj));
    const double fw_gap = obj - gw.minCoeff();
    if (fw_gap <= 0.5 * tol * std::max(omega, tol)) break;

    const Vector next = project_to_simplex(momentum - step * (gram * momentum));
    const double theta_next =
        0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
    if (obj > prev_obj) {  // restart the momentum when the objective rises
      momentum = next;
      theta = 1.0;
    } else {
      momentum = next + ((theta - 1.0) / theta_next) * (next - w);
      theta = theta_next;
    }
    prev_obj = obj;
    w = next;
  }
  if (w.dot(gram * w) > best_obj) w = best;
  const auto fw_gap = [&gram](const Vector& v) {
    const Vector gv = gram * v;
    return v.dot(gv) - gv.minCoeff();
  };
  const double scale = std::max(1.0, gram.diagonal().maxCoeff());
  const Vector polished = polish_active_set(gram, w);
  const bool keep_polished =
      fw_gap(polished) <= fw_gap(w) &&
      polished.dot(gram * polished) <= w.dot(gram * w) + 1e-12 * scale;
  return keep_polished ? polished : w;
}

}  // namespace

MarginalResult min_norm_point(const std::vector<Vector>& gradients, double tol) {
  if (gradients.empty()) throw InputError("min_norm_point needs gradients");
  if (tol <= 0.0) throw InputError("min_norm_point tolerance must be positive");
  const int q = static_cast<int>(gradients.size());
  const Eigen::Index n = gradients.front().size();
  double max_norm = 0.0;
  for (int i = 0; i < q; ++i) {
    if (gradients[static_cast<std::size_t>(i)].size() != n)
      throw InputError("gradient dimension mismatch");
    if (!gradients[static_cast<std::size_t>(i)].allFinite())
      throw NumericError("non-finite gradient", i, -1);
    max_norm = std::max(max_norm, gradients[static_cast<std::size_t>(i)].norm());
  }

  Vector weights;
  if (q == 1) {
    weights = Vector::Ones(1);
  } else if (q == 2) {
    weights = weights_q2(gradients[0], gradients[1]);
  } else {
    Matrix g(n, q);
    for (int i = 0; i < q; ++i) g.col(i) = gradients[static_cast<std::size_t>(i)];
    weights = weights_pg(g, tol, 10 * q * static_cast<int>(n));
  }

  Vector hull_point = Vector::Zero(n);
  for (int i = 0; i < q; ++i)
    hull_point += weights[i] * gradients[static_cast<std::size_t>(i)];

  MarginalResult result;
  result.omega = hull_point.norm();
  result.weights = weights;
  // Below the solver tolerance no descent direction is certifiable; the
  // critical-point convention takes over and the direction is zero.
  if (result.omega > std::max(tol, 1e-13 * max_norm)) {
    result.direction = -hull_point / result.omega;
  } else {
    result.direction = Vector::Zero(n);
  }

  double max_inner = -std::numeric_limits<double>::infinity();
  for (const auto& grad : gradients)
    max_inner = std::max(max_inner, grad.dot(result.direction));
  result.gap = std::max(0.0, max_inner + result.omega);
  return result;
}

MarginalResult marginal_true(MeteredEvaluator& eval, const Vector& x, double tol) {
  const SampleTuple full = eval.problem().full_sample_tuple();
  return marginal_subsampled(eval, x, full, tol);
}

MarginalResult marginal_subsampled(MeteredEvaluator& eval, const Vector& x,
                                   const SampleTuple& samples, double tol) {
  const int q = eval.problem().num_objectives();
  if (static_cast<int>(samples.size()) != q)
    throw InputError("sample tuple must have one multiset per component");
  std::vector<Vector> gradients;
  gradients.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    gradients.push_back(
        eval.value_and_gradient(i, samples[static_cast<std::size_t>(i)], x).gradient);
  return min_norm_point(gradients, tol);
}

}  // namespace asmop
