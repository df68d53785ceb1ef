// SPDX-License-Identifier: Apache-2.0

#include "asmop/pareto_front.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "asmop/evaluator.hpp"
#include "asmop/rng.hpp"
#include "asmop/trace_io.hpp"

namespace asmop {

bool dominates(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("objective dimension mismatch");
  bool strict = false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

namespace {

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

Vector full_objectives(const MultiObjectiveProblem& problem, const Vector& x) {
  CostMeter scratch;
  MeteredEvaluator eval(problem, scratch, false);
  const SampleTuple full = problem.full_sample_tuple();
  Vector out(problem.num_objectives());
  for (int i = 0; i < problem.num_objectives(); ++i)
    out[i] = eval.value(i, full[static_cast<std::size_t>(i)], x);
  return out;
}

}  // namespace

std::vector<FrontEntry> nondominated_filter(std::vector<FrontEntry> entries) {
  std::vector<FrontEntry> archive;
  for (auto& candidate : entries) {
    if (!candidate.objectives.allFinite())
      throw InputError("objective vectors must be finite");
    const bool drop = std::any_of(
        archive.begin(), archive.end(), [&candidate](const FrontEntry& held) {
          // duplicates keep the first by insertion order
          return dominates(held.objectives, candidate.objectives) ||
                 held.objectives == candidate.objectives;
        });
    if (drop) continue;
    std::erase_if(archive, [&candidate](const FrontEntry& held) {
      return dominates(candidate.objectives, held.objectives);
    });
    archive.push_back(std::move(candidate));
  }
  std::sort(archive.begin(), archive.end(),
            [](const FrontEntry& a, const FrontEntry& b) {
              return lex_less(a.objectives, b.objectives);
            });
  return archive;
}

double hypervolume_2d(const std::vector<FrontEntry>& entries,
                      const Vector& reference) {
  if (reference.size() != 2)
    throw InputError("2-objective hypervolume needs a 2-vector reference");
  std::vector<FrontEntry> front = nondominated_filter(entries);
  double volume = 0.0;
  double prev_f2 = reference[1];
  for (const auto& entry : front) {  // sorted by f1 ascending, f2 descending
    const double width = reference[0] - entry.objectives[0];
    const double height = prev_f2 - entry.objectives[1];
    if (width <= 0.0 || height <= 0.0) continue;
    volume += width * height;
    prev_f2 = entry.objectives[1];
  }
  return volume;
}

FrontArchive build_front(const MultiObjectiveProblem& problem,
                         const FrontConfig& config,
                         const RoundObserver& observer) {
  if (config.n_seeds < 1) throw InputError("front needs n_seeds >= 1");
  if (config.rounds < 1) throw InputError("front needs rounds >= 1");
  if (config.children_per_point < 1)
    throw InputError("front needs children_per_point >= 1");
  if (config.inner_iterations < 1)
    throw InputError("front needs inner_iterations >= 1");
  if (!(config.radius > 0.0)) throw InputError("front radius must be positive");

  std::mt19937_64 rng(config.seed);
  std::uint64_t child_counter = 0;

  auto refine = [&](const Vector& start) -> std::optional<FrontEntry> {
    SolverConfig solver = config.solver;
    solver.x0 = start;
    solver.max_iterations = config.inner_iterations;
    solver.seed = mix_seed(config.seed, ++child_counter);
    solver.track_omega_true = false;
    solver.track_phi_fix = false;
    try {
      const RunResult run_result = run(problem, solver);
      FrontEntry entry;
      entry.point = run_result.final_point;
      entry.objectives = full_objectives(problem, entry.point);
      return entry;
    } catch (const Error& e) {
      std::cerr << "warning: front child failed and was skipped: " << e.what()
                << "\n";
      return std::nullopt;
    }
  };

  std::vector<FrontEntry> entries;
  for (int s = 0; s < config.n_seeds; ++s) {
    Vector start = config.solver.x0;
    if (s > 0)
      start += config.radius * unit_sphere_vector(rng, problem.dimension());
    if (auto entry = refine(start)) entries.push_back(std::move(*entry));
  }
  FrontArchive archive;
  archive.entries = nondominated_filter(std::move(entries));
  if (observer) observer(0, archive);

  for (int round = 1; round <= config.rounds; ++round) {
    std::vector<FrontEntry> pool = archive.entries;
    for (const auto& parent : archive.entries) {
      for (int c = 0; c < config.children_per_point; ++c) {
        const Vector child =
            parent.point +
            config.radius * unit_sphere_vector(rng, problem.dimension());
        if (auto entry = refine(child)) pool.push_back(std::move(*entry));
      }
    }
    archive.entries = nondominated_filter(std::move(pool));
    archive.generation = round;
    if (observer) observer(round, archive);
  }
  return archive;
}

std::string front_to_csv(const std::vector<FrontEntry>& entries) {
  if (entries.empty()) throw InputError("no front entries to write");
  const Eigen::Index q = entries.front().objectives.size();
  const Eigen::Index n = entries.front().point.size();
  std::string out;
  for (Eigen::Index i = 1; i <= q; ++i) {
    if (i > 1) out += ',';
    out += "f_" + std::to_string(i);
  }
  for (Eigen::Index i = 1; i <= n; ++i) out += ",x_" + std::to_string(i);
  out += '\n';
  for (const auto& e : entries) {
    for (Eigen::Index i = 0; i < q; ++i) {
      if (i > 0) out += ',';
      out += format_double(e.objectives[i]);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      out += ',';
      out += format_double(e.point[i]);
    }
    out += '\n';
  }
  return out;
}

void write_front_csv(const std::vector<FrontEntry>& entries,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << front_to_csv(entries);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace asmop
