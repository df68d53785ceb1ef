// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "asmop/types.hpp"

namespace asmop {

struct SamplingConfig {
  enum class Increase { Fixed, Geometric };

  double initial_fraction = 0.05;    // N_0^i as a fraction of N
  double increment_fraction = 0.001; // fixed-rule size step as a fraction of N
  Increase increase_rule = Increase::Fixed;
  double geometric_factor = 1.1;
  int additional_size = 1;           // D_k^i for mini-batch components
};

/// Outcome of the sample-update cascade for one component.
enum class Step2Branch {
  NotInMinibatch,      // component already at full sample, untouched
  CriticalIncrease,    // omega below epsilon * h: grow and redraw
  AdditionalIncrease,  // additional-sampling ratio below nu: grow and redraw
  KeepSameSet,         // sample ratio below eta: keep size and multiset
  Redraw,              // keep size, draw a fresh multiset
};

/// The independent per-iteration draw used for the acceptance ratio:
/// mini-batch components get a small multiset, full-sample components are
/// forced to the deterministic full set.
struct AdditionalSample {
  SampleTuple indices;
  std::vector<bool> forced_full;
};

/// Owns the per-component index multisets, their sizes, and all randomness of
/// one run. Sizes never decrease; a component that reaches the full sample
/// switches permanently to the deterministic index set. Single-owner mutable:
/// one state per run.
class SampleState {
 public:
  SampleState(int num_components, int full_size, int initial_size,
              std::uint64_t seed);

  int num_components() const noexcept { return static_cast<int>(sizes_.size()); }
  int full_size() const noexcept { return full_size_; }
  int size(int i) const { return sizes_.at(i); }
  std::vector<int> sizes() const { return sizes_; }
  const IndexSet& multiset(int i) const { return tuple_.at(i); }
  const SampleTuple& tuple() const noexcept { return tuple_; }

  bool is_full(int i) const { return sizes_.at(i) == full_size_; }
  /// True when M_b^k is empty (full-sample phase).
  bool full_sample_phase() const;
  std::vector<int> minibatch_components() const;

  /// h_k^i = (N - N_k^i) / N.
  double error_estimate(int i) const;

  /// Draws D_k; only valid during the mini-batch phase.
  AdditionalSample draw_additional(int additional_size);

  struct Step2Inputs {
    double omega_sub = 0.0;
    std::optional<double> rho_additional;  // required while any component is mini-batch
    std::optional<double> rho_sample;      // absent when no candidate step exists
    double epsilon = 1e-5;
    double nu = 1e-4;
    double eta = 0.25;
  };

  /// Applies the per-component update cascade and returns the branch taken
  /// for each component.
  std::vector<Step2Branch> step2_update(const Step2Inputs& in,
                                        const SamplingConfig& config);

  /// Appends the current sizes to the per-component history.
  void note_iteration();
  const std::vector<std::vector<int>>& size_history() const noexcept {
    return history_;
  }

 private:
  void redraw(int i, int new_size);
  int increased_size(int current, const SamplingConfig& config) const;

  int full_size_;
  std::vector<int> sizes_;
  SampleTuple tuple_;
  std::mt19937_64 rng_;
  std::vector<std::vector<int>> history_;
};

}  // namespace asmop
