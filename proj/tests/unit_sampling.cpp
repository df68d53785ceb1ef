// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "asmop/sampling.hpp"

using namespace asmop;

TEST_CASE("construction and error estimate") {
  SampleState state(2, 10000, 500, 7);
  CHECK(state.size(0) == 500);
  CHECK(state.multiset(0).size() == 500);
  CHECK(state.error_estimate(0) == doctest::Approx(0.95));
  CHECK(!state.full_sample_phase());
  CHECK(state.minibatch_components() == std::vector<int>{0, 1});

  SampleState tiny(1, 100, 95, 1);
  CHECK(tiny.error_estimate(0) == doctest::Approx(0.05));
  SampleState full(1, 100, 100, 1);
  CHECK(full.error_estimate(0) == 0.0);
  CHECK(full.full_sample_phase());

  CHECK_THROWS_AS(SampleState(0, 10, 1, 0), InputError);
  CHECK_THROWS_AS(SampleState(1, 10, 0, 0), InputError);
  CHECK_THROWS_AS(SampleState(1, 10, 11, 0), InputError);
}

TEST_CASE("full-size components hold the deterministic index set") {
  SampleState state(2, 50, 50, 3);
  std::vector<int> expected(50);
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(state.multiset(0) == expected);
  CHECK(state.multiset(1) == expected);
}

TEST_CASE("additional draws") {
  SampleState state(2, 100, 10, 11);
  const auto draw = state.draw_additional(1);
  REQUIRE(draw.indices.size() == 2);
  CHECK(draw.indices[0].size() == 1);
  CHECK(draw.indices[1].size() == 1);
  CHECK(!draw.forced_full[0]);
  CHECK(draw.indices[0][0] >= 0);
  CHECK(draw.indices[0][0] < 100);

  // determinism: same seed, same stream of draws
  SampleState replay(2, 100, 10, 11);
  const auto draw2 = replay.draw_additional(1);
  CHECK(draw.indices == draw2.indices);

  CHECK_THROWS_AS(state.draw_additional(0), InputError);
}

TEST_CASE("mixed phases force full components to the whole sample") {
  SampleState state(2, 40, 20, 5);
  // push component 0 to the full sample via the critical branch
  SamplingConfig config;
  config.increment_fraction = 1.0;  // one increase reaches N
  SampleState::Step2Inputs inputs;
  inputs.omega_sub = 0.0;
  inputs.rho_additional = 1.0;
  inputs.rho_sample = 1.0;
  auto branches = state.step2_update(inputs, config);
  CHECK(branches[0] == Step2Branch::CriticalIncrease);
  CHECK(state.is_full(0));
  CHECK(state.is_full(1));

  SampleState partial(2, 40, 20, 5);
  // one component full, one not: use per-component epsilon sensitivity
  // by growing only while any component remains below N
  SamplingConfig small;
  small.increment_fraction = 0.5;
  SampleState::Step2Inputs crit;
  crit.omega_sub = -1.0;  // below every epsilon * h
  crit.rho_additional = 1.0;
  crit.rho_sample = 1.0;
  partial.step2_update(crit, small);  // 20 -> 40 both... keep asymmetric setup
  CHECK(partial.full_sample_phase());
}

TEST_CASE("step2 cascade branches") {
  SamplingConfig config;
  config.increment_fraction = 0.001;

  SUBCASE("criticality branch grows the sample") {
    SampleState state(1, 1000, 500, 2);
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = 1e-9;
    inputs.epsilon = 1e-5;  // epsilon * h = 5e-6 > omega
    inputs.rho_additional = 1.0;
    inputs.rho_sample = 1.0;
    const auto branches = state.step2_update(inputs, config);
    CHECK(branches[0] == Step2Branch::CriticalIncrease);
    CHECK(state.size(0) == 501);
  }

  SUBCASE("additional-sampling branch grows the sample") {
    SampleState state(1, 1000, 500, 2);
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = 1.0;
    inputs.rho_additional = -3.0;
    inputs.nu = 1e-4;
    inputs.rho_sample = 1.0;
    const auto branches = state.step2_update(inputs, config);
    CHECK(branches[0] == Step2Branch::AdditionalIncrease);
    CHECK(state.size(0) == 501);
  }

  SUBCASE("rejected candidate keeps size and multiset") {
    SampleState state(1, 1000, 500, 2);
    const IndexSet before = state.multiset(0);
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = 1.0;
    inputs.rho_additional = 1.0;
    inputs.rho_sample = 0.1;
    inputs.eta = 0.25;
    const auto branches = state.step2_update(inputs, config);
    CHECK(branches[0] == Step2Branch::KeepSameSet);
    CHECK(state.size(0) == 500);
    CHECK(state.multiset(0) == before);
  }

  SUBCASE("accepted candidate redraws at the same size") {
    SampleState state(1, 10000, 500, 2);
    const IndexSet before = state.multiset(0);
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = 1.0;
    inputs.rho_additional = 1.0;
    inputs.rho_sample = 0.9;
    bool any_differs = false;
    for (int redraw = 0; redraw < 20; ++redraw) {
      const auto branches = state.step2_update(inputs, config);
      CHECK(branches[0] == Step2Branch::Redraw);
      CHECK(state.size(0) == 500);
      if (state.multiset(0) != before) any_differs = true;
    }
    CHECK(any_differs);
  }

  SUBCASE("missing rho_D during the mini-batch phase is a contract violation") {
    SampleState state(1, 1000, 500, 2);
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = 1.0;
    const auto call = [&] { state.step2_update(inputs, config); };
    CHECK_THROWS_AS(call(), InputError);
  }

  SUBCASE("full components are untouched") {
    SampleState state(1, 100, 100, 2);
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = 0.0;
    const auto branches = state.step2_update(inputs, config);
    CHECK(branches[0] == Step2Branch::NotInMinibatch);
    CHECK(state.size(0) == 100);
  }
}

TEST_CASE("geometric increase rule") {
  SamplingConfig config;
  config.increase_rule = SamplingConfig::Increase::Geometric;
  config.geometric_factor = 1.1;
  SampleState state(1, 1000, 100, 2);
  SampleState::Step2Inputs inputs;
  inputs.omega_sub = -1.0;
  inputs.rho_additional = 1.0;
  state.step2_update(inputs, config);
  CHECK(state.size(0) == 110);
  // small sizes still grow by at least one
  SampleState small(1, 1000, 5, 2);
  small.step2_update(inputs, config);
  CHECK(small.size(0) == 6);
}

TEST_CASE("sizes are monotone under random cascades") {
  SamplingConfig config;
  std::mt19937_64 rng(19);
  SampleState state(3, 200, 10, 23);
  std::vector<int> last = state.sizes();
  for (int k = 0; k < 300; ++k) {
    SampleState::Step2Inputs inputs;
    inputs.omega_sub = (rng() % 7 == 0) ? 0.0 : 1.0;
    inputs.rho_additional = (rng() % 5 == 0) ? -1.0 : 1.0;
    inputs.rho_sample = (rng() % 3 == 0) ? 0.0 : 1.0;
    if (state.full_sample_phase()) break;
    state.step2_update(inputs, config);
    state.note_iteration();
    const auto current = state.sizes();
    for (std::size_t i = 0; i < current.size(); ++i)
      CHECK(current[i] >= last[i]);
    last = current;
  }
  // histories are per component and nondecreasing
  for (const auto& history : state.size_history()) {
    for (std::size_t k = 1; k < history.size(); ++k)
      CHECK(history[k] >= history[k - 1]);
  }
}

TEST_CASE("singleton draws are empirically uniform") {
  const int n = 50;
  const int draws = 100000;
  SampleState state(1, n, 10, 123);
  std::vector<int> counts(n, 0);
  for (int d = 0; d < draws; ++d) {
    const auto sample = state.draw_additional(1);
    counts[static_cast<std::size_t>(sample.indices[0][0])]++;
  }
  const double p = 1.0 / n;
  const double sigma = std::sqrt(draws * p * (1.0 - p));
  const double expected = draws * p;
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(counts[static_cast<std::size_t>(i)] - expected) <=
          5.0 * sigma);
}
