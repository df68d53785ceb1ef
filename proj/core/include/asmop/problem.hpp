// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "asmop/types.hpp"

namespace asmop {

/// Per-sample oracle for one objective component. Implementations must be
/// pure: results depend only on (j, x), so a problem instance can be shared
/// read-only across parallel runs.
class SampleOracle {
 public:
  virtual ~SampleOracle() = default;

  virtual double value(int j, const Vector& x) const = 0;
  virtual Vector gradient(int j, const Vector& x) const = 0;
  virtual Matrix hessian(int j, const Vector& x) const = 0;

  /// Uniform bound on the spectral norm of every per-sample Hessian.
  virtual double hessian_norm_bound() const = 0;
};

/// A finite-sum multi-objective problem: q components, each an average of N
/// per-sample terms over a shared decision space of dimension n. All
/// components must have the same sample count.
class MultiObjectiveProblem {
 public:
  MultiObjectiveProblem(int dimension, int samples_per_component,
                        std::vector<std::shared_ptr<const SampleOracle>> components);

  int num_objectives() const noexcept { return static_cast<int>(components_.size()); }
  int dimension() const noexcept { return dimension_; }
  int samples_per_component() const noexcept { return samples_; }

  const SampleOracle& component(int i) const;

  /// c_h: bound on every per-sample Hessian norm, max over components.
  double hessian_norm_bound() const noexcept { return hessian_bound_; }

  /// The deterministic tuple ({0..N-1}, ..., {0..N-1}).
  SampleTuple full_sample_tuple() const;

 private:
  int dimension_;
  int samples_;
  double hessian_bound_;
  std::vector<std::shared_ptr<const SampleOracle>> components_;
};

}  // namespace asmop
