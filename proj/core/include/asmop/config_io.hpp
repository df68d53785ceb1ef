// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "asmop/baselines.hpp"
#include "asmop/pareto_front.hpp"
#include "asmop/problem_families.hpp"
#include "asmop/solver.hpp"

namespace asmop {

/// Configuration rejected; `issues` lists every problem found in one pass.
class ConfigError : public InputError {
 public:
  explicit ConfigError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

enum class ProblemFamily {
  SyntheticLogistic,
  SyntheticMixed,
  Quadratics,
  CsvLogistic,
  CsvMixed,
};

struct ProblemSpec {
  ProblemFamily family = ProblemFamily::SyntheticLogistic;
  int dimension = 21;
  int samples = 1000;
  int objectives = 2;
  std::uint64_t data_seed = 7;
  std::vector<double> ridge;               // logistic components
  std::vector<std::string> datasets;       // csv families, one per component
  std::vector<Vector> centers;             // quadratics
};

enum class SolverKind { Asmop, Smg, DetMotr };

std::string solver_kind_name(SolverKind kind);

struct ExperimentConfig {
  ProblemSpec problem;
  std::vector<SolverKind> solvers = {SolverKind::Asmop};
  double x0_fill = 0.1;
  std::optional<Vector> x0_explicit;
  SolverConfig asmop;
  SmgConfig smg;
  FrontConfig pareto;
  std::vector<std::uint64_t> seeds = {1};
  std::string output_dir = "out";
  std::string label = "experiment";
};

/// Parses and validates; defaults are filled in, every violation is reported
/// at once. `source_dir` anchors relative dataset paths.
ExperimentConfig parse_config(const std::string& text,
                              const std::filesystem::path& source_dir);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical serialized form; load(write(c)) == c.
std::string config_to_json(const ExperimentConfig& config);

void write_config(const ExperimentConfig& config,
                  const std::filesystem::path& path);

/// Instantiates the configured problem (generates or loads data).
MultiObjectiveProblem build_problem(const ProblemSpec& spec);

/// Initial point of the configured dimension.
Vector resolve_initial_point(const ExperimentConfig& config, int dimension);

}  // namespace asmop
