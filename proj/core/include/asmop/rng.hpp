// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

#include "asmop/types.hpp"

namespace asmop {

// Deterministic sampling helpers on top of std::mt19937_64. The standard
// distribution classes are implementation-defined, so everything that feeds
// a seeded run is pinned here to keep replays byte-identical.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n).
inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

/// Standard normal via Box-Muller; consumes exactly two draws per call.
inline double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  while (u1 <= 0.0) u1 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

inline Vector normal_vector(std::mt19937_64& rng, int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = standard_normal(rng);
  return v;
}

/// Uniform point on the unit sphere in R^n.
inline Vector unit_sphere_vector(std::mt19937_64& rng, int n) {
  Vector v = normal_vector(rng, n);
  double norm = v.norm();
  while (norm == 0.0) {
    v = normal_vector(rng, n);
    norm = v.norm();
  }
  return v / norm;
}

/// splitmix64 mix of a seed and a salt, for deriving per-task substreams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace asmop
