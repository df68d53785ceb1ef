// SPDX-License-Identifier: Apache-2.0

#include "asmop/problem.hpp"

#include <numeric>
#include <utility>

namespace asmop {

MultiObjectiveProblem::MultiObjectiveProblem(
    int dimension, int samples_per_component,
    std::vector<std::shared_ptr<const SampleOracle>> components)
    : dimension_(dimension),
      samples_(samples_per_component),
      hessian_bound_(0.0),
      components_(std::move(components)) {
  if (dimension_ < 1) throw InputError("problem dimension must be positive");
  if (samples_ < 1) throw InputError("samples per component must be positive");
  if (components_.empty()) throw InputError("problem needs at least one component");
  for (const auto& c : components_) {
    if (!c) throw InputError("null component oracle");
    hessian_bound_ = std::max(hessian_bound_, c->hessian_norm_bound());
  }
}

const SampleOracle& MultiObjectiveProblem::component(int i) const {
  if (i < 0 || i >= num_objectives())
    throw InputError("component index out of range");
  return *components_[static_cast<std::size_t>(i)];
}

SampleTuple MultiObjectiveProblem::full_sample_tuple() const {
  IndexSet full(static_cast<std::size_t>(samples_));
  std::iota(full.begin(), full.end(), 0);
  return SampleTuple(static_cast<std::size_t>(num_objectives()), full);
}

}  // namespace asmop
