// SPDX-License-Identifier: Apache-2.0
//
// Benchmark command line: runs the adaptive-sampling trust-region solver and
// the reference methods on configured problems, writes trace CSVs and SVG
// plots, builds Pareto fronts, and hosts a fast self-check suite.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asmop/baselines.hpp"
#include "asmop/config_io.hpp"
#include "asmop/marginal.hpp"
#include "asmop/pareto_front.hpp"
#include "asmop/plot.hpp"
#include "asmop/problem_families.hpp"
#include "asmop/rng.hpp"
#include "asmop/solver.hpp"
#include "asmop/trace_io.hpp"

namespace {

using namespace asmop;

struct Overrides {
  std::vector<std::uint64_t> seeds;
  std::int64_t budget = -1;
  std::string solver;
  std::string out;
};

void apply_overrides(ExperimentConfig& config, const Overrides& overrides) {
  if (!overrides.seeds.empty()) config.seeds = overrides.seeds;
  if (overrides.budget >= 0) {
    config.asmop.budget = overrides.budget;
    config.smg.budget = overrides.budget;
  }
  if (!overrides.out.empty()) config.output_dir = overrides.out;
  if (!overrides.solver.empty()) {
    if (overrides.solver == "asmop") {
      config.solvers = {SolverKind::Asmop};
    } else if (overrides.solver == "smg") {
      config.solvers = {SolverKind::Smg};
    } else if (overrides.solver == "det-motr") {
      config.solvers = {SolverKind::DetMotr};
    } else {
      throw InputError("unknown solver override '" + overrides.solver + "'");
    }
  }
}

RunResult execute(SolverKind kind, const MultiObjectiveProblem& problem,
                  const ExperimentConfig& config, std::uint64_t seed) {
  switch (kind) {
    case SolverKind::Asmop: {
      SolverConfig solver = config.asmop;
      solver.x0 = resolve_initial_point(config, problem.dimension());
      solver.seed = seed;
      return run(problem, solver);
    }
    case SolverKind::DetMotr: {
      SolverConfig solver = config.asmop;
      solver.x0 = resolve_initial_point(config, problem.dimension());
      solver.seed = seed;
      return deterministic_motr(problem, solver);
    }
    case SolverKind::Smg: {
      SmgConfig solver = config.smg;
      solver.x0 = resolve_initial_point(config, problem.dimension());
      solver.seed = seed;
      return smg_run(problem, solver);
    }
  }
  throw InputError("unknown solver kind");
}

double min_omega(const RunResult& result) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& rec : result.trace)
    best = std::min(best, rec.omega_true ? *rec.omega_true : rec.omega_sub);
  return best;
}

void print_summary(const std::string& name, std::uint64_t seed,
                   const RunResult& result) {
  const double last =
      result.trace.empty()
          ? std::numeric_limits<double>::quiet_NaN()
          : (result.trace.back().omega_true ? *result.trace.back().omega_true
                                            : result.trace.back().omega_sub);
  std::printf(
      "%s seed %llu: iterations=%zu cost=%lld final_omega=%.6g min_omega=%.6g\n",
      name.c_str(), static_cast<unsigned long long>(seed), result.trace.size(),
      static_cast<long long>(result.scalar_products), last, min_omega(result));
}

int cmd_run_or_compare(const std::string& config_path, const Overrides& overrides,
                       bool compare) {
  ExperimentConfig config = load_config(config_path);
  apply_overrides(config, overrides);
  const auto problem = build_problem(config.problem);
  const std::filesystem::path out_dir = config.output_dir;
  std::filesystem::create_directories(out_dir);

  const std::vector<SolverKind> kinds =
      compare ? config.solvers
              : std::vector<SolverKind>{config.solvers.front()};

  struct Completed {
    std::string label;
    SolverKind kind;
    RunResult result;
  };
  std::vector<Completed> completed;
  for (SolverKind kind : kinds) {
    for (std::uint64_t seed : config.seeds) {
      const std::string name = solver_kind_name(kind);
      RunResult result = execute(kind, problem, config, seed);
      const std::string stem =
          config.label + "_" + name + "_seed" + std::to_string(seed);
      write_trace(result.trace, problem.num_objectives(),
                  out_dir / (stem + ".csv"));
      print_summary(name, seed, result);
      completed.push_back(
          {name + " seed " + std::to_string(seed), kind, std::move(result)});
    }
  }

  if (compare) {
    std::vector<TraceSeries> series;
    for (const auto& c : completed) series.push_back({c.label, &c.result.trace});
    emit_plot(series, PlotKind::OmegaVsCost,
              out_dir / (config.label + "_compare_omega.svg"));
  } else {
    const std::string name = solver_kind_name(kinds.front());
    std::vector<TraceSeries> series;
    for (const auto& c : completed) series.push_back({c.label, &c.result.trace});
    emit_plot(series, PlotKind::OmegaVsCost,
              out_dir / (config.label + "_" + name + "_omega.svg"));
    if (kinds.front() != SolverKind::Smg)
      emit_plot(series, PlotKind::SampleSizeVsCost,
                out_dir / (config.label + "_" + name + "_samples.svg"));
  }
  return 0;
}

int cmd_pareto(const std::string& config_path, const Overrides& overrides) {
  ExperimentConfig config = load_config(config_path);
  apply_overrides(config, overrides);
  const auto problem = build_problem(config.problem);
  const std::filesystem::path out_dir = config.output_dir;
  std::filesystem::create_directories(out_dir);

  FrontConfig front = config.pareto;
  front.solver = config.asmop;
  front.solver.x0 = resolve_initial_point(config, problem.dimension());
  front.seed = config.seeds.front();

  const FrontArchive archive = build_front(
      problem, front, [](int round, const FrontArchive& snapshot) {
        std::printf("round %d: %zu nondominated points\n", round,
                    snapshot.entries.size());
      });
  write_front_csv(archive.entries, out_dir / (config.label + "_front.csv"));
  if (problem.num_objectives() == 2) {
    emit_front_plot(archive.entries,
                    out_dir / (config.label + "_front.svg"));
  } else {
    std::fprintf(stderr,
                 "warning: front scatter plots cover two objectives only; "
                 "skipping the SVG\n");
  }
  std::printf("front: %zu points written\n", archive.entries.size());
  return 0;
}

int cmd_validate(const std::string& config_path) {
  const ExperimentConfig config = load_config(config_path);
  (void)config;
  std::printf("configuration OK\n");
  return 0;
}

// --- self test ------------------------------------------------------------
// The reference computations below are intentionally local to this binary.

double selftest_grid_omega(const std::vector<Vector>& gradients) {
  const int q = static_cast<int>(gradients.size());
  if (q == 1) return gradients[0].norm();
  auto norm_at = [&](const std::vector<double>& w) {
    Vector p = Vector::Zero(gradients[0].size());
    for (int i = 0; i < q; ++i) p += w[static_cast<std::size_t>(i)] * gradients[static_cast<std::size_t>(i)];
    return p.norm();
  };
  std::vector<double> w(static_cast<std::size_t>(q), 0.0);
  std::vector<double> best_w(static_cast<std::size_t>(q), 1.0 / q);
  std::vector<double> lo(static_cast<std::size_t>(q), 0.0);
  std::vector<double> hi(static_cast<std::size_t>(q), 1.0);
  double best = norm_at(best_w);
  double step = q == 2 ? 1e-3 : (q == 3 ? 1e-2 : 2e-2);
  std::function<void(int, double)> enumerate = [&](int i, double used) {
    if (i == q - 1) {
      const double last = 1.0 - used;
      if (last < lo[static_cast<std::size_t>(i)] - 1e-12 ||
          last > hi[static_cast<std::size_t>(i)] + 1e-12 || last < -1e-12)
        return;
      w[static_cast<std::size_t>(i)] = std::max(0.0, last);
      const double norm = norm_at(w);
      if (norm < best) {
        best = norm;
        best_w = w;
      }
      return;
    }
    const double start =
        std::ceil((lo[static_cast<std::size_t>(i)] - 1e-12) / step) * step;
    for (double v = start;
         v <= hi[static_cast<std::size_t>(i)] + 1e-12 && used + v <= 1.0 + 1e-12;
         v += step) {
      w[static_cast<std::size_t>(i)] = v;
      enumerate(i + 1, used + v);
    }
  };
  while (true) {
    enumerate(0, 0.0);
    if (step <= 1e-6) break;
    for (int i = 0; i < q; ++i) {
      lo[static_cast<std::size_t>(i)] =
          std::max(0.0, best_w[static_cast<std::size_t>(i)] - 3.0 * step);
      hi[static_cast<std::size_t>(i)] =
          std::min(1.0, best_w[static_cast<std::size_t>(i)] + 3.0 * step);
    }
    step /= 10.0;
  }
  return best;
}

bool selftest_min_norm() {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int q = 1 + static_cast<int>(bounded_uint(rng, 4));
    const int n = 2 + static_cast<int>(bounded_uint(rng, 5));
    std::vector<Vector> gradients;
    for (int i = 0; i < q; ++i) gradients.push_back(normal_vector(rng, n));
    const auto result = min_norm_point(gradients, default_marginal_tol(q));
    if (std::abs(result.omega - selftest_grid_omega(gradients)) > 1e-5)
      return false;
  }
  return true;
}

bool selftest_cauchy() {
  const auto data = make_synthetic_classification(11, 300, 2, 2024);
  const auto problem = make_logistic_problem(data, {1e-3, 1e-3});
  SolverConfig config;
  config.x0 = Vector::Constant(11, 0.1);
  config.max_iterations = 400;
  config.seed = 7;
  config.track_omega_true = false;
  const auto result = run(problem, config);
  if (result.cauchy_violations != 0) return false;
  if (result.model_error_violations != 0) return false;
  for (const auto& rec : result.trace) {
    if (rec.omega_sub < 0.0) return false;
    if (rec.rho_sample && !(rec.predicted_decrease && *rec.predicted_decrease > 0.0))
      return false;
  }
  return true;
}

bool selftest_filter() {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FrontEntry> entries;
    for (int i = 0; i < 60; ++i) {
      FrontEntry e;
      e.point = Vector::Zero(1);
      e.objectives = normal_vector(rng, 2);
      entries.push_back(std::move(e));
    }
    const auto filtered = nondominated_filter(entries);
    // local O(m^2) recount
    std::vector<Vector> kept;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < entries.size() && !drop; ++j) {
        if (i == j) continue;
        bool weak = true;
        bool strict = false;
        for (int d = 0; d < 2; ++d) {
          if (entries[j].objectives[d] > entries[i].objectives[d]) weak = false;
          if (entries[j].objectives[d] < entries[i].objectives[d]) strict = true;
        }
        if (weak && strict) drop = true;
        if (entries[j].objectives == entries[i].objectives && j < i) drop = true;
      }
      if (!drop) kept.push_back(entries[i].objectives);
    }
    std::sort(kept.begin(), kept.end(), [](const Vector& a, const Vector& b) {
      return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    if (kept.size() != filtered.size()) return false;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (kept[i] != filtered[i].objectives) return false;
  }
  return true;
}

int cmd_selftest() {
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  struct Suite {
    const char* name;
    bool (*fn)();
  };
  const Suite suites[] = {
      {"min-norm grid equivalence", selftest_min_norm},
      {"cauchy decrease on a seeded run", selftest_cauchy},
      {"nondominated filter recount", selftest_filter},
  };
  for (const auto& suite : suites) {
    const bool ok = suite.fn();
    std::printf("%-34s %s\n", suite.name, ok ? "pass" : "FAIL");
    all = all && ok;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::printf("selftest finished in %lld ms\n", static_cast<long long>(elapsed));
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-sampling multi-objective trust-region benchmark"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides overrides;

  auto add_common = [&](CLI::App* cmd, bool with_config = true) {
    if (with_config)
      cmd->add_option("config", config_path, "experiment config (JSON)")
          ->required();
    cmd->add_option("--seed", overrides.seeds,
                    "replace the config seed list (repeatable)");
    cmd->add_option("--budget", overrides.budget,
                    "override the scalar-product budget");
    cmd->add_option("--out", overrides.out, "override the output directory");
  };

  auto* run_cmd =
      app.add_subcommand("run", "run the configured solver on every seed");
  add_common(run_cmd);
  run_cmd->add_option("--solver", overrides.solver,
                      "override the solver (asmop | smg | det-motr)");

  auto* compare_cmd = app.add_subcommand(
      "compare", "run every configured solver and overlay the results");
  add_common(compare_cmd);

  auto* pareto_cmd =
      app.add_subcommand("pareto", "build a Pareto front approximation");
  add_common(pareto_cmd);

  auto* validate_cmd =
      app.add_subcommand("validate-config", "validate a config and exit");
  validate_cmd->add_option("config", config_path, "experiment config (JSON)")
      ->required();

  app.add_subcommand("selftest", "run the fast invariant suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run_or_compare(config_path, overrides, false);
    if (compare_cmd->parsed())
      return cmd_run_or_compare(config_path, overrides, true);
    if (pareto_cmd->parsed()) return cmd_pareto(config_path, overrides);
    if (validate_cmd->parsed()) return cmd_validate(config_path);
    return cmd_selftest();
  } catch (const asmop::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
}
