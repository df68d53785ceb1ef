// SPDX-License-Identifier: Apache-2.0

#include "asmop/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "asmop/rng.hpp"

namespace asmop {

SampleState::SampleState(int num_components, int full_size, int initial_size,
                         std::uint64_t seed)
    : full_size_(full_size), rng_(seed) {
  if (num_components < 1) throw InputError("need at least one component");
  if (full_size < 1) throw InputError("full sample size must be positive");
  if (initial_size < 1 || initial_size > full_size)
    throw InputError("initial sample size must lie in [1, N]");
  sizes_.assign(static_cast<std::size_t>(num_components), 0);
  tuple_.resize(static_cast<std::size_t>(num_components));
  history_.resize(static_cast<std::size_t>(num_components));
  for (int i = 0; i < num_components; ++i) redraw(i, initial_size);
}

bool SampleState::full_sample_phase() const {
  return std::all_of(sizes_.begin(), sizes_.end(),
                     [this](int s) { return s == full_size_; });
}

std::vector<int> SampleState::minibatch_components() const {
  std::vector<int> out;
  for (int i = 0; i < num_components(); ++i)
    if (!is_full(i)) out.push_back(i);
  return out;
}

double SampleState::error_estimate(int i) const {
  return static_cast<double>(full_size_ - size(i)) /
         static_cast<double>(full_size_);
}

void SampleState::redraw(int i, int new_size) {
  auto& set = tuple_[static_cast<std::size_t>(i)];
  sizes_[static_cast<std::size_t>(i)] = new_size;
  if (new_size == full_size_) {
    // Reaching the full sample switches to the deterministic index set.
    set.resize(static_cast<std::size_t>(full_size_));
    std::iota(set.begin(), set.end(), 0);
    return;
  }
  set.clear();
  set.reserve(static_cast<std::size_t>(new_size));
  for (int k = 0; k < new_size; ++k)
    set.push_back(static_cast<int>(
        bounded_uint(rng_, static_cast<std::uint64_t>(full_size_))));
}

AdditionalSample SampleState::draw_additional(int additional_size) {
  if (additional_size < 1)
    throw InputError("additional sample size must be positive");
  if (full_sample_phase())
    throw InputError("additional sampling is only defined in the mini-batch phase");
  AdditionalSample out;
  out.indices.resize(static_cast<std::size_t>(num_components()));
  out.forced_full.assign(static_cast<std::size_t>(num_components()), false);
  for (int i = 0; i < num_components(); ++i) {
    auto& set = out.indices[static_cast<std::size_t>(i)];
    if (is_full(i)) {
      set.resize(static_cast<std::size_t>(full_size_));
      std::iota(set.begin(), set.end(), 0);
      out.forced_full[static_cast<std::size_t>(i)] = true;
      continue;
    }
    set.reserve(static_cast<std::size_t>(additional_size));
    for (int k = 0; k < additional_size; ++k)
      set.push_back(static_cast<int>(
          bounded_uint(rng_, static_cast<std::uint64_t>(full_size_))));
  }
  return out;
}

int SampleState::increased_size(int current, const SamplingConfig& config) const {
  int next;
  if (config.increase_rule == SamplingConfig::Increase::Geometric) {
    next = static_cast<int>(
        std::lround(static_cast<double>(current) * config.geometric_factor));
    next = std::max(next, current + 1);
  } else {
    const int step = std::max(
        1, static_cast<int>(std::lround(config.increment_fraction *
                                        static_cast<double>(full_size_))));
    next = current + step;
  }
  return std::min(next, full_size_);
}

std::vector<Step2Branch> SampleState::step2_update(const Step2Inputs& in,
                                                   const SamplingConfig& config) {
  std::vector<Step2Branch> branches(static_cast<std::size_t>(num_components()),
                                    Step2Branch::NotInMinibatch);
  const bool any_minibatch = !full_sample_phase();
  if (any_minibatch && !in.rho_additional)
    throw InputError("rho_D is required while any component is mini-batch");
  for (int i = 0; i < num_components(); ++i) {
    if (is_full(i)) continue;
    auto& branch = branches[static_cast<std::size_t>(i)];
    if (in.omega_sub < in.epsilon * error_estimate(i)) {
      branch = Step2Branch::CriticalIncrease;
      redraw(i, increased_size(size(i), config));
    } else if (*in.rho_additional < in.nu) {
      branch = Step2Branch::AdditionalIncrease;
      redraw(i, increased_size(size(i), config));
    } else if (!in.rho_sample || *in.rho_sample < in.eta) {
      // No candidate step behaves like a rejected one: keep size and multiset.
      branch = Step2Branch::KeepSameSet;
    } else {
      branch = Step2Branch::Redraw;
      redraw(i, size(i));
    }
  }
  return branches;
}

void SampleState::note_iteration() {
  for (int i = 0; i < num_components(); ++i)
    history_[static_cast<std::size_t>(i)].push_back(size(i));
}

}  // namespace asmop
