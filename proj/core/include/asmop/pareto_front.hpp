// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "asmop/problem.hpp"
#include "asmop/solver.hpp"
#include "asmop/types.hpp"

namespace asmop {

struct FrontEntry {
  Vector point;
  Vector objectives;
};

struct FrontArchive {
  std::vector<FrontEntry> entries;
  int generation = 0;
};

/// True when a improves every objective of b weakly and at least one strictly.
bool dominates(const Vector& a, const Vector& b);

/// Maximal nondominated subset; entries with identical objective vectors keep
/// the first by input order. Output is sorted lexicographically by objective
/// vector.
std::vector<FrontEntry> nondominated_filter(std::vector<FrontEntry> entries);

/// Hypervolume dominated by a 2-objective front relative to a reference point.
double hypervolume_2d(const std::vector<FrontEntry>& entries,
                      const Vector& reference);

struct FrontConfig {
  int n_seeds = 5;
  double radius = 0.5;
  int children_per_point = 4;
  int rounds = 3;
  int inner_iterations = 30;
  std::uint64_t seed = 0;
  SolverConfig solver;
};

using RoundObserver = std::function<void(int round, const FrontArchive&)>;

/// Front construction: refine seed points, then repeatedly perturb every
/// archive point on a sphere of the given radius, refine each child for a few
/// iterations, and keep the nondominated union. Children that fail to solve
/// are skipped with a warning. Deterministic given the seed.
FrontArchive build_front(const MultiObjectiveProblem& problem,
                         const FrontConfig& config,
                         const RoundObserver& observer = {});

/// CSV with one row per entry: f_1..f_q then the point coordinates.
std::string front_to_csv(const std::vector<FrontEntry>& entries);

void write_front_csv(const std::vector<FrontEntry>& entries,
                     const std::filesystem::path& path);

}  // namespace asmop
