// SPDX-License-Identifier: Apache-2.0

#include "asmop/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asmop/dataset_io.hpp"

namespace asmop {

using json = nlohmann::ordered_json;

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out = "invalid configuration:";
  for (const auto& issue : issues) out += "\n  - " + issue;
  return out;
}

struct Reader {
  std::vector<std::string> issues;

  void check_keys(const json& obj, const std::string& context,
                  std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
      bool known = false;
      for (const char* key : allowed)
        if (item.key() == key) {
          known = true;
          break;
        }
      if (!known) issues.push_back(context + ": unknown key '" + item.key() + "'");
    }
  }

  template <typename T>
  void read_number(const json& obj, const std::string& context, const char* key,
                   T& out) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_number()) {
      issues.push_back(context + "." + key + " must be a number");
      return;
    }
    out = v.get<T>();
  }

  void read_bool(const json& obj, const std::string& context, const char* key,
                 bool& out) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_boolean()) {
      issues.push_back(context + "." + key + " must be a boolean");
      return;
    }
    out = v.get<bool>();
  }

  void read_string(const json& obj, const std::string& context, const char* key,
                   std::string& out) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_string()) {
      issues.push_back(context + "." + key + " must be a string");
      return;
    }
    out = v.get<std::string>();
  }
};

void read_problem(Reader& r, const json& obj, ProblemSpec& spec,
                  const std::filesystem::path& source_dir) {
  r.check_keys(obj, "problem",
               {"family", "dimension", "samples", "objectives", "data_seed",
                "ridge", "datasets", "centers"});
  std::string family;
  r.read_string(obj, "problem", "family", family);
  if (family == "synthetic_logistic") {
    spec.family = ProblemFamily::SyntheticLogistic;
  } else if (family == "synthetic_mixed") {
    spec.family = ProblemFamily::SyntheticMixed;
  } else if (family == "quadratics") {
    spec.family = ProblemFamily::Quadratics;
  } else if (family == "csv_logistic") {
    spec.family = ProblemFamily::CsvLogistic;
  } else if (family == "csv_mixed") {
    spec.family = ProblemFamily::CsvMixed;
  } else if (family.empty()) {
    r.issues.push_back("problem.family missing");
  } else {
    r.issues.push_back("problem.family '" + family + "' is not recognized");
  }
  r.read_number(obj, "problem", "dimension", spec.dimension);
  r.read_number(obj, "problem", "samples", spec.samples);
  r.read_number(obj, "problem", "objectives", spec.objectives);
  r.read_number(obj, "problem", "data_seed", spec.data_seed);

  if (obj.contains("ridge")) {
    const json& v = obj.at("ridge");
    if (!v.is_array()) {
      r.issues.push_back("problem.ridge must be an array of numbers");
    } else {
      spec.ridge.clear();
      for (const auto& entry : v) {
        if (!entry.is_number()) {
          r.issues.push_back("problem.ridge entries must be numbers");
          break;
        }
        spec.ridge.push_back(entry.get<double>());
      }
    }
  }
  if (obj.contains("datasets")) {
    const json& v = obj.at("datasets");
    if (!v.is_array()) {
      r.issues.push_back("problem.datasets must be an array of paths");
    } else {
      spec.datasets.clear();
      for (const auto& entry : v) {
        if (!entry.is_string()) {
          r.issues.push_back("problem.datasets entries must be strings");
          break;
        }
        std::filesystem::path p = entry.get<std::string>();
        if (p.is_relative()) p = source_dir / p;
        spec.datasets.push_back(p.lexically_normal().string());
      }
    }
  }
  if (obj.contains("centers")) {
    const json& v = obj.at("centers");
    if (!v.is_array()) {
      r.issues.push_back("problem.centers must be an array of vectors");
    } else {
      spec.centers.clear();
      for (const auto& entry : v) {
        if (!entry.is_array() || entry.empty()) {
          r.issues.push_back("problem.centers entries must be nonempty arrays");
          break;
        }
        Vector c(entry.size());
        bool ok = true;
        for (std::size_t i = 0; i < entry.size(); ++i) {
          if (!entry[i].is_number()) {
            r.issues.push_back("problem.centers entries must hold numbers");
            ok = false;
            break;
          }
          c[static_cast<Eigen::Index>(i)] = entry[i].get<double>();
        }
        if (!ok) break;
        spec.centers.push_back(std::move(c));
      }
    }
  }
}

void read_asmop(Reader& r, const json& obj, SolverConfig& cfg) {
  r.check_keys(obj, "asmop",
               {"delta0", "delta_max", "gamma1", "gamma2", "nu", "eta",
                "epsilon", "t_scale", "t_bar_scale", "t_power",
                "initial_sample_fraction", "increment_fraction", "increase_rule",
                "geometric_factor", "additional_sample_size", "hessian", "c_b",
                "identity_scale", "budget", "max_iterations", "fs_omega_tol",
                "marginal_tol", "strict_checks", "track_omega_true",
                "track_phi_fix"});
  r.read_number(obj, "asmop", "delta0", cfg.delta0);
  r.read_number(obj, "asmop", "delta_max", cfg.delta_max);
  r.read_number(obj, "asmop", "gamma1", cfg.gamma1);
  if (obj.contains("gamma2")) {
    double gamma2 = 0.0;
    r.read_number(obj, "asmop", "gamma2", gamma2);
    if (cfg.gamma1 > 0.0 &&
        std::abs(gamma2 - 1.0 / cfg.gamma1) > 1e-12 * (1.0 + gamma2))
      r.issues.push_back("asmop.gamma2 must equal 1/gamma1");
  }
  r.read_number(obj, "asmop", "nu", cfg.nu);
  r.read_number(obj, "asmop", "eta", cfg.eta);
  r.read_number(obj, "asmop", "epsilon", cfg.epsilon);
  r.read_number(obj, "asmop", "t_scale", cfg.t.scale);
  r.read_number(obj, "asmop", "t_bar_scale", cfg.t_bar.scale);
  double t_power = cfg.t.power;
  r.read_number(obj, "asmop", "t_power", t_power);
  cfg.t.power = t_power;
  cfg.t_bar.power = t_power;
  r.read_number(obj, "asmop", "initial_sample_fraction",
                cfg.sampling.initial_fraction);
  r.read_number(obj, "asmop", "increment_fraction",
                cfg.sampling.increment_fraction);
  std::string increase;
  r.read_string(obj, "asmop", "increase_rule", increase);
  if (increase == "geometric") {
    cfg.sampling.increase_rule = SamplingConfig::Increase::Geometric;
  } else if (!increase.empty() && increase != "fixed") {
    r.issues.push_back("asmop.increase_rule must be 'fixed' or 'geometric'");
  }
  r.read_number(obj, "asmop", "geometric_factor", cfg.sampling.geometric_factor);
  r.read_number(obj, "asmop", "additional_sample_size",
                cfg.sampling.additional_size);
  std::string hessian;
  r.read_string(obj, "asmop", "hessian", hessian);
  if (hessian == "zero") {
    cfg.model.policy = HessianPolicy::Zero;
  } else if (hessian == "identity") {
    cfg.model.policy = HessianPolicy::ScaledIdentity;
  } else if (!hessian.empty() && hessian != "subsampled") {
    r.issues.push_back("asmop.hessian must be 'subsampled', 'zero' or 'identity'");
  }
  r.read_number(obj, "asmop", "c_b", cfg.model.c_b);
  r.read_number(obj, "asmop", "identity_scale", cfg.model.identity_scale);
  r.read_number(obj, "asmop", "budget", cfg.budget);
  r.read_number(obj, "asmop", "max_iterations", cfg.max_iterations);
  r.read_number(obj, "asmop", "fs_omega_tol", cfg.fs_omega_tol);
  r.read_number(obj, "asmop", "marginal_tol", cfg.marginal_tol);
  r.read_bool(obj, "asmop", "strict_checks", cfg.strict_checks);
  r.read_bool(obj, "asmop", "track_omega_true", cfg.track_omega_true);
  r.read_bool(obj, "asmop", "track_phi_fix", cfg.track_phi_fix);
}

void read_smg(Reader& r, const json& obj, SmgConfig& cfg) {
  r.check_keys(obj, "smg",
               {"alpha0", "alpha_power", "batch_size", "budget",
                "max_iterations"});
  r.read_number(obj, "smg", "alpha0", cfg.alpha0);
  r.read_number(obj, "smg", "alpha_power", cfg.alpha_power);
  r.read_number(obj, "smg", "batch_size", cfg.batch_size);
  r.read_number(obj, "smg", "budget", cfg.budget);
  r.read_number(obj, "smg", "max_iterations", cfg.max_iterations);
}

void read_pareto(Reader& r, const json& obj, FrontConfig& cfg) {
  r.check_keys(obj, "pareto",
               {"n_seeds", "radius", "children_per_point", "rounds",
                "inner_iterations"});
  r.read_number(obj, "pareto", "n_seeds", cfg.n_seeds);
  r.read_number(obj, "pareto", "radius", cfg.radius);
  r.read_number(obj, "pareto", "children_per_point", cfg.children_per_point);
  r.read_number(obj, "pareto", "rounds", cfg.rounds);
  r.read_number(obj, "pareto", "inner_iterations", cfg.inner_iterations);
}

void validate_semantics(Reader& r, ExperimentConfig& cfg) {
  const ProblemSpec& p = cfg.problem;
  const int q_default = static_cast<int>(p.centers.size());
  switch (p.family) {
    case ProblemFamily::Quadratics:
      if (p.centers.empty()) {
        r.issues.push_back("problem.centers required for the quadratics family");
      } else {
        cfg.problem.objectives = q_default;
        cfg.problem.dimension = static_cast<int>(p.centers.front().size());
        cfg.problem.samples = 1;
        for (const auto& c : p.centers)
          if (c.size() != p.centers.front().size())
            r.issues.push_back("problem.centers must share one dimension");
      }
      break;
    case ProblemFamily::SyntheticLogistic:
    case ProblemFamily::SyntheticMixed:
      if (p.dimension < 2) r.issues.push_back("problem.dimension must be >= 2");
      if (p.samples < 10) r.issues.push_back("problem.samples must be >= 10");
      if (p.family == ProblemFamily::SyntheticMixed && p.objectives != 2)
        r.issues.push_back("synthetic_mixed always has 2 objectives");
      if (p.family == ProblemFamily::SyntheticLogistic && p.objectives < 1)
        r.issues.push_back("problem.objectives must be >= 1");
      break;
    case ProblemFamily::CsvLogistic:
      if (p.datasets.empty())
        r.issues.push_back("problem.datasets required for csv families");
      cfg.problem.objectives = static_cast<int>(p.datasets.size());
      break;
    case ProblemFamily::CsvMixed:
      if (p.datasets.size() != 2)
        r.issues.push_back("csv_mixed needs exactly two datasets");
      cfg.problem.objectives = 2;
      break;
  }
  for (const auto& path : p.datasets) {
    if (!std::filesystem::exists(path))
      r.issues.push_back("dataset does not exist: " + path);
  }

  // Ridge defaults for the logistic components.
  const bool logistic_family = p.family == ProblemFamily::SyntheticLogistic ||
                               p.family == ProblemFamily::CsvLogistic;
  const bool mixed_family = p.family == ProblemFamily::SyntheticMixed ||
                            p.family == ProblemFamily::CsvMixed;
  if (logistic_family) {
    if (cfg.problem.ridge.empty())
      cfg.problem.ridge.assign(static_cast<std::size_t>(cfg.problem.objectives),
                               1e-3);
    else if (static_cast<int>(cfg.problem.ridge.size()) != cfg.problem.objectives)
      r.issues.push_back("problem.ridge needs one entry per objective");
  } else if (mixed_family) {
    if (cfg.problem.ridge.empty())
      cfg.problem.ridge.assign(1, 1e-3);
    else if (cfg.problem.ridge.size() != 1)
      r.issues.push_back(
          "problem.ridge for mixed families holds one entry (the logistic component)");
  }
  for (double ridge : cfg.problem.ridge)
    if (ridge < 0.0) r.issues.push_back("problem.ridge entries must be >= 0");

  if (cfg.solvers.empty()) r.issues.push_back("solvers must not be empty");
  if (cfg.seeds.empty()) r.issues.push_back("seeds must not be empty");

  if (cfg.x0_explicit && cfg.problem.family != ProblemFamily::Quadratics &&
      cfg.x0_explicit->size() != cfg.problem.dimension)
    r.issues.push_back("x0 array length must equal problem.dimension");

  // Mirror the solver range checks so everything is reported in one pass.
  SolverConfig probe = cfg.asmop;
  probe.x0 = Vector::Zero(cfg.problem.dimension);
  try {
    probe.validate(cfg.problem.dimension);
  } catch (const InputError& e) {
    r.issues.push_back(e.what());
  }
  if (!(cfg.smg.alpha0 > 0.0)) r.issues.push_back("smg.alpha0 must be positive");
  if (cfg.smg.alpha_power < 0.0)
    r.issues.push_back("smg.alpha_power must be nonnegative");
  if (cfg.smg.batch_size < 1) r.issues.push_back("smg.batch_size must be >= 1");
  if (cfg.pareto.rounds < 1) r.issues.push_back("pareto.rounds must be >= 1");
  if (cfg.pareto.n_seeds < 1) r.issues.push_back("pareto.n_seeds must be >= 1");
  if (cfg.pareto.children_per_point < 1)
    r.issues.push_back("pareto.children_per_point must be >= 1");
  if (cfg.pareto.inner_iterations < 1)
    r.issues.push_back("pareto.inner_iterations must be >= 1");
  if (!(cfg.pareto.radius > 0.0))
    r.issues.push_back("pareto.radius must be positive");
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : InputError(join_issues(issues)), issues_(std::move(issues)) {}

std::string solver_kind_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Asmop:
      return "asmop";
    case SolverKind::Smg:
      return "smg";
    case SolverKind::DetMotr:
      return "det-motr";
  }
  return "unknown";
}

ExperimentConfig parse_config(const std::string& text,
                              const std::filesystem::path& source_dir) {
  json root;
  bool blank = true;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      blank = false;
      break;
    }
  if (blank) {
    root = json::object();
  } else {
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError({std::string("not valid JSON: ") + e.what()});
    }
    if (!root.is_object()) throw ConfigError({"top level must be a JSON object"});
  }

  Reader r;
  ExperimentConfig cfg;
  r.check_keys(root, "config",
               {"label", "output_dir", "seeds", "x0", "problem", "solvers",
                "asmop", "smg", "pareto"});
  r.read_string(root, "config", "label", cfg.label);
  r.read_string(root, "config", "output_dir", cfg.output_dir);

  if (root.contains("seeds")) {
    const json& v = root.at("seeds");
    if (!v.is_array()) {
      r.issues.push_back("seeds must be an array of integers");
    } else {
      cfg.seeds.clear();
      for (const auto& entry : v) {
        if (!entry.is_number_unsigned() && !entry.is_number_integer()) {
          r.issues.push_back("seeds entries must be integers");
          break;
        }
        cfg.seeds.push_back(entry.get<std::uint64_t>());
      }
    }
  }

  if (root.contains("x0")) {
    const json& v = root.at("x0");
    if (v.is_number()) {
      cfg.x0_fill = v.get<double>();
    } else if (v.is_array()) {
      Vector x0(v.size());
      bool ok = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) {
          r.issues.push_back("x0 array must hold numbers");
          ok = false;
          break;
        }
        x0[static_cast<Eigen::Index>(i)] = v[i].get<double>();
      }
      if (ok) cfg.x0_explicit = std::move(x0);
    } else {
      r.issues.push_back("x0 must be a number or an array");
    }
  }

  if (root.contains("problem")) {
    const json& v = root.at("problem");
    if (!v.is_object()) {
      r.issues.push_back("problem must be an object");
    } else {
      read_problem(r, v, cfg.problem, source_dir);
    }
  } else {
    r.issues.push_back("problem missing");
  }

  if (root.contains("solvers")) {
    const json& v = root.at("solvers");
    if (!v.is_array()) {
      r.issues.push_back("solvers must be an array");
    } else {
      cfg.solvers.clear();
      for (const auto& entry : v) {
        if (!entry.is_string()) {
          r.issues.push_back("solvers entries must be strings");
          break;
        }
        const std::string name = entry.get<std::string>();
        if (name == "asmop") {
          cfg.solvers.push_back(SolverKind::Asmop);
        } else if (name == "smg") {
          cfg.solvers.push_back(SolverKind::Smg);
        } else if (name == "det-motr") {
          cfg.solvers.push_back(SolverKind::DetMotr);
        } else {
          r.issues.push_back("unknown solver '" + name + "'");
        }
      }
    }
  }

  if (root.contains("asmop")) {
    const json& v = root.at("asmop");
    if (!v.is_object())
      r.issues.push_back("asmop must be an object");
    else
      read_asmop(r, v, cfg.asmop);
  }
  if (root.contains("smg")) {
    const json& v = root.at("smg");
    if (!v.is_object())
      r.issues.push_back("smg must be an object");
    else
      read_smg(r, v, cfg.smg);
  }
  if (root.contains("pareto")) {
    const json& v = root.at("pareto");
    if (!v.is_object())
      r.issues.push_back("pareto must be an object");
    else
      read_pareto(r, v, cfg.pareto);
  }

  if (root.contains("problem") && root.at("problem").is_object())
    validate_semantics(r, cfg);

  if (!r.issues.empty()) throw ConfigError(std::move(r.issues));
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({"cannot open config file " + path.string()});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.has_parent_path()
                                        ? path.parent_path()
                                        : std::filesystem::path("."));
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json root;
  root["label"] = cfg.label;
  root["output_dir"] = cfg.output_dir;
  root["seeds"] = cfg.seeds;
  if (cfg.x0_explicit) {
    json x0 = json::array();
    for (Eigen::Index i = 0; i < cfg.x0_explicit->size(); ++i)
      x0.push_back((*cfg.x0_explicit)[i]);
    root["x0"] = std::move(x0);
  } else {
    root["x0"] = cfg.x0_fill;
  }

  json problem;
  switch (cfg.problem.family) {
    case ProblemFamily::SyntheticLogistic:
      problem["family"] = "synthetic_logistic";
      break;
    case ProblemFamily::SyntheticMixed:
      problem["family"] = "synthetic_mixed";
      break;
    case ProblemFamily::Quadratics:
      problem["family"] = "quadratics";
      break;
    case ProblemFamily::CsvLogistic:
      problem["family"] = "csv_logistic";
      break;
    case ProblemFamily::CsvMixed:
      problem["family"] = "csv_mixed";
      break;
  }
  problem["dimension"] = cfg.problem.dimension;
  problem["samples"] = cfg.problem.samples;
  problem["objectives"] = cfg.problem.objectives;
  problem["data_seed"] = cfg.problem.data_seed;
  if (!cfg.problem.ridge.empty()) problem["ridge"] = cfg.problem.ridge;
  if (!cfg.problem.datasets.empty()) problem["datasets"] = cfg.problem.datasets;
  if (!cfg.problem.centers.empty()) {
    json centers = json::array();
    for (const auto& c : cfg.problem.centers) {
      json center = json::array();
      for (Eigen::Index i = 0; i < c.size(); ++i) center.push_back(c[i]);
      centers.push_back(std::move(center));
    }
    problem["centers"] = std::move(centers);
  }
  root["problem"] = std::move(problem);

  json solvers = json::array();
  for (SolverKind kind : cfg.solvers) solvers.push_back(solver_kind_name(kind));
  root["solvers"] = std::move(solvers);

  json asmop;
  asmop["delta0"] = cfg.asmop.delta0;
  asmop["delta_max"] = cfg.asmop.delta_max;
  asmop["gamma1"] = cfg.asmop.gamma1;
  asmop["nu"] = cfg.asmop.nu;
  asmop["eta"] = cfg.asmop.eta;
  asmop["epsilon"] = cfg.asmop.epsilon;
  asmop["t_scale"] = cfg.asmop.t.scale;
  asmop["t_bar_scale"] = cfg.asmop.t_bar.scale;
  asmop["t_power"] = cfg.asmop.t.power;
  asmop["initial_sample_fraction"] = cfg.asmop.sampling.initial_fraction;
  asmop["increment_fraction"] = cfg.asmop.sampling.increment_fraction;
  asmop["increase_rule"] =
      cfg.asmop.sampling.increase_rule == SamplingConfig::Increase::Geometric
          ? "geometric"
          : "fixed";
  asmop["geometric_factor"] = cfg.asmop.sampling.geometric_factor;
  asmop["additional_sample_size"] = cfg.asmop.sampling.additional_size;
  switch (cfg.asmop.model.policy) {
    case HessianPolicy::Subsampled:
      asmop["hessian"] = "subsampled";
      break;
    case HessianPolicy::Zero:
      asmop["hessian"] = "zero";
      break;
    case HessianPolicy::ScaledIdentity:
      asmop["hessian"] = "identity";
      break;
  }
  asmop["c_b"] = cfg.asmop.model.c_b;
  asmop["identity_scale"] = cfg.asmop.model.identity_scale;
  asmop["budget"] = cfg.asmop.budget;
  asmop["max_iterations"] = cfg.asmop.max_iterations;
  asmop["fs_omega_tol"] = cfg.asmop.fs_omega_tol;
  asmop["marginal_tol"] = cfg.asmop.marginal_tol;
  asmop["strict_checks"] = cfg.asmop.strict_checks;
  asmop["track_omega_true"] = cfg.asmop.track_omega_true;
  asmop["track_phi_fix"] = cfg.asmop.track_phi_fix;
  root["asmop"] = std::move(asmop);

  json smg;
  smg["alpha0"] = cfg.smg.alpha0;
  smg["alpha_power"] = cfg.smg.alpha_power;
  smg["batch_size"] = cfg.smg.batch_size;
  smg["budget"] = cfg.smg.budget;
  smg["max_iterations"] = cfg.smg.max_iterations;
  root["smg"] = std::move(smg);

  json pareto;
  pareto["n_seeds"] = cfg.pareto.n_seeds;
  pareto["radius"] = cfg.pareto.radius;
  pareto["children_per_point"] = cfg.pareto.children_per_point;
  pareto["rounds"] = cfg.pareto.rounds;
  pareto["inner_iterations"] = cfg.pareto.inner_iterations;
  root["pareto"] = std::move(pareto);

  return root.dump(2) + "\n";
}

void write_config(const ExperimentConfig& config,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << config_to_json(config);
  if (!out) throw Error("failed writing " + path.string());
}

MultiObjectiveProblem build_problem(const ProblemSpec& spec) {
  switch (spec.family) {
    case ProblemFamily::SyntheticLogistic: {
      auto data = make_synthetic_classification(spec.dimension, spec.samples,
                                                spec.objectives, spec.data_seed);
      std::vector<double> ridge = spec.ridge;
      if (ridge.empty())
        ridge.assign(static_cast<std::size_t>(spec.objectives), 1e-3);
      return make_logistic_problem(std::move(data), std::move(ridge));
    }
    case ProblemFamily::SyntheticMixed: {
      auto data = make_synthetic_classification(spec.dimension, spec.samples, 2,
                                                spec.data_seed);
      const double ridge = spec.ridge.empty() ? 1e-3 : spec.ridge.front();
      return make_mixed_problem(std::move(data[0]), ridge, std::move(data[1]));
    }
    case ProblemFamily::Quadratics:
      return make_quadratic_problem(spec.centers);
    case ProblemFamily::CsvLogistic: {
      std::vector<Dataset> data;
      data.reserve(spec.datasets.size());
      for (const auto& path : spec.datasets)
        data.push_back(load_dataset_csv(path));
      std::vector<double> ridge = spec.ridge;
      if (ridge.empty()) ridge.assign(data.size(), 1e-3);
      return make_logistic_problem(std::move(data), std::move(ridge));
    }
    case ProblemFamily::CsvMixed: {
      if (spec.datasets.size() != 2)
        throw InputError("csv_mixed needs exactly two datasets");
      Dataset logistic = load_dataset_csv(spec.datasets[0]);
      Dataset least_squares = load_dataset_csv(spec.datasets[1]);
      const double ridge = spec.ridge.empty() ? 1e-3 : spec.ridge.front();
      return make_mixed_problem(std::move(logistic), ridge,
                                std::move(least_squares));
    }
  }
  throw InputError("unknown problem family");
}

Vector resolve_initial_point(const ExperimentConfig& config, int dimension) {
  if (config.x0_explicit) {
    if (config.x0_explicit->size() != dimension)
      throw InputError("x0 has dimension " +
                       std::to_string(config.x0_explicit->size()) +
                       ", problem needs " + std::to_string(dimension));
    return *config.x0_explicit;
  }
  return Vector::Constant(dimension, config.x0_fill);
}

}  // namespace asmop
