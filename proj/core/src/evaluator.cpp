// SPDX-License-Identifier: Apache-2.0

#include "asmop/evaluator.hpp"

#include <cmath>
#include <string>

namespace asmop {

MeteredEvaluator::MeteredEvaluator(const MultiObjectiveProblem& problem,
                                   CostMeter& meter, bool cache_points)
    : problem_(&problem), meter_(&meter), caching_(cache_points) {}

void MeteredEvaluator::check_indices(int component, const IndexSet& indices,
                                     const Vector& x) const {
  if (component < 0 || component >= problem_->num_objectives())
    throw InputError("component index out of range");
  if (indices.empty()) throw InputError("index multiset must be nonempty");
  if (x.size() != problem_->dimension())
    throw InputError("point dimension mismatch: got " +
                     std::to_string(x.size()) + ", expected " +
                     std::to_string(problem_->dimension()));
  const int n_samples = problem_->samples_per_component();
  for (int j : indices) {
    if (j < 0 || j >= n_samples)
      throw InputError("sample index " + std::to_string(j) + " out of range");
  }
}

MeteredEvaluator::PointEntry& MeteredEvaluator::entry_for(const Vector& x) {
  ++clock_;
  for (auto& e : entries_) {
    if (e.x.size() == x.size() && e.x == x) {
      e.last_use = clock_;
      return e;
    }
  }
  if (entries_.size() >= 2) {
    std::size_t oldest = entries_[0].last_use <= entries_[1].last_use ? 0 : 1;
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(oldest));
  }
  PointEntry e;
  e.x = x;
  e.touched.resize(static_cast<std::size_t>(problem_->num_objectives()));
  e.last_use = clock_;
  entries_.push_back(std::move(e));
  return entries_.back();
}

void MeteredEvaluator::charge(PointEntry* entry, int component, int j) {
  if (entry == nullptr) {
    meter_->add(1);
    return;
  }
  if (entry->touched[static_cast<std::size_t>(component)].insert(j).second)
    meter_->add(1);
}

double MeteredEvaluator::value(int component, const IndexSet& indices,
                               const Vector& x) {
  check_indices(component, indices, x);
  PointEntry* entry = caching_ ? &entry_for(x) : nullptr;
  const SampleOracle& oracle = problem_->component(component);
  double sum = 0.0;
  for (int j : indices) {
    charge(entry, component, j);
    const double v = oracle.value(j, x);
    if (!std::isfinite(v))
      throw NumericError("non-finite value from component " +
                             std::to_string(component) + ", sample " +
                             std::to_string(j),
                         component, j);
    sum += v;
  }
  return sum / static_cast<double>(indices.size());
}

MeteredEvaluator::ValueGradient MeteredEvaluator::value_and_gradient(
    int component, const IndexSet& indices, const Vector& x) {
  check_indices(component, indices, x);
  PointEntry* entry = caching_ ? &entry_for(x) : nullptr;
  const SampleOracle& oracle = problem_->component(component);
  double sum = 0.0;
  Vector grad = Vector::Zero(x.size());
  for (int j : indices) {
    charge(entry, component, j);
    const double v = oracle.value(j, x);
    const Vector g = oracle.gradient(j, x);
    if (!std::isfinite(v) || !g.allFinite())
      throw NumericError("non-finite evaluation from component " +
                             std::to_string(component) + ", sample " +
                             std::to_string(j),
                         component, j);
    sum += v;
    grad += g;
  }
  const double inv = 1.0 / static_cast<double>(indices.size());
  return {sum * inv, grad * inv};
}

Matrix MeteredEvaluator::hessian(int component, const IndexSet& indices,
                                 const Vector& x) {
  check_indices(component, indices, x);
  PointEntry* entry = caching_ ? &entry_for(x) : nullptr;
  const SampleOracle& oracle = problem_->component(component);
  Matrix sum = Matrix::Zero(x.size(), x.size());
  for (int j : indices) {
    charge(entry, component, j);
    Matrix h = oracle.hessian(j, x);
    if (!h.allFinite())
      throw NumericError("non-finite Hessian from component " +
                             std::to_string(component) + ", sample " +
                             std::to_string(j),
                         component, j);
    sum += h;
  }
  return sum / static_cast<double>(indices.size());
}

double MeteredEvaluator::scalarize(const Vector& x, const SampleTuple& samples) {
  if (static_cast<int>(samples.size()) != problem_->num_objectives())
    throw InputError("sample tuple must have one multiset per component");
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < problem_->num_objectives(); ++i)
    best = std::max(best, value(i, samples[static_cast<std::size_t>(i)], x));
  return best;
}

}  // namespace asmop
