// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "asmop/cost_meter.hpp"
#include "asmop/problem.hpp"
#include "asmop/types.hpp"

namespace asmop {

/// Subsampled-average oracle access with scalar-product accounting.
///
/// Cost model: the first oracle touch of a (component, sample, point) triple
/// charges one scalar product (the x.a_j inner product); later touches at one
/// of the two most recently used points are free, so a gradient or Hessian
/// request after the value at the same point adds nothing. With caching off
/// every touch charges, one per index occurrence.
///
/// One evaluator per run; not safe for concurrent use.
class MeteredEvaluator {
 public:
  struct ValueGradient {
    double value;
    Vector gradient;
  };

  MeteredEvaluator(const MultiObjectiveProblem& problem, CostMeter& meter,
                   bool cache_points = true);

  /// Average of per-sample values over the multiset (Eq.-(5) style average;
  /// repeated indices count with multiplicity).
  double value(int component, const IndexSet& indices, const Vector& x);

  /// Average value and average gradient in one pass.
  ValueGradient value_and_gradient(int component, const IndexSet& indices,
                                   const Vector& x);

  /// Average of per-sample Hessians.
  Matrix hessian(int component, const IndexSet& indices, const Vector& x);

  /// max_i of the subsampled component values at x.
  double scalarize(const Vector& x, const SampleTuple& samples);

  const MultiObjectiveProblem& problem() const noexcept { return *problem_; }
  CostMeter& meter() noexcept { return *meter_; }

 private:
  struct PointEntry {
    Vector x;
    std::vector<std::unordered_set<int>> touched;  // per component
    std::uint64_t last_use = 0;
  };

  void check_indices(int component, const IndexSet& indices, const Vector& x) const;
  PointEntry& entry_for(const Vector& x);
  void charge(PointEntry* entry, int component, int j);

  const MultiObjectiveProblem* problem_;
  CostMeter* meter_;
  bool caching_;
  std::uint64_t clock_ = 0;
  std::vector<PointEntry> entries_;
};

}  // namespace asmop
