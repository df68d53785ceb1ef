// SPDX-License-Identifier: Apache-2.0

#include "asmop/problem_families.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "asmop/rng.hpp"

namespace asmop {

namespace {

// log(1 + exp(-m)) without overflow for large |m|.
double logistic_loss(double margin) {
  if (margin >= 0.0) return std::log1p(std::exp(-margin));
  return -margin + std::log1p(std::exp(margin));
}

// sigma(-m) = 1 / (1 + exp(m)).
double sigma_neg(double margin) {
  if (margin >= 0.0) {
    const double e = std::exp(-margin);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(margin));
}

void check_dataset(const Dataset& d, const char* family) {
  if (d.features.rows() != d.labels.size())
    throw InputError(std::string(family) + ": feature rows and labels differ");
  if (d.features.rows() < 1 || d.features.cols() < 1)
    throw InputError(std::string(family) + ": empty dataset");
}

class LogisticOracle final : public SampleOracle {
 public:
  LogisticOracle(Matrix features, Vector labels, double ridge)
      : features_(std::move(features)), labels_(std::move(labels)), ridge_(ridge) {
    for (Eigen::Index j = 0; j < labels_.size(); ++j) {
      if (labels_[j] != 1.0 && labels_[j] != -1.0)
        throw InputError("logistic labels must be -1 or +1");
    }
    double max_sq = 0.0;
    for (Eigen::Index j = 0; j < features_.rows(); ++j)
      max_sq = std::max(max_sq, features_.row(j).squaredNorm());
    bound_ = 0.25 * max_sq + ridge_;
  }

  double value(int j, const Vector& x) const override {
    const double margin = labels_[j] * features_.row(j).dot(x);
    double v = logistic_loss(margin);
    if (ridge_ > 0.0) v += 0.5 * ridge_ * x.head(x.size() - 1).squaredNorm();
    return v;
  }

  Vector gradient(int j, const Vector& x) const override {
    const double margin = labels_[j] * features_.row(j).dot(x);
    Vector g = (-labels_[j] * sigma_neg(margin)) * features_.row(j).transpose();
    if (ridge_ > 0.0) g.head(x.size() - 1) += ridge_ * x.head(x.size() - 1);
    return g;
  }

  Matrix hessian(int j, const Vector& x) const override {
    const double margin = labels_[j] * features_.row(j).dot(x);
    const double s = sigma_neg(margin);
    Matrix h = (s * (1.0 - s)) * features_.row(j).transpose() * features_.row(j);
    if (ridge_ > 0.0) {
      for (Eigen::Index i = 0; i + 1 < x.size(); ++i) h(i, i) += ridge_;
    }
    return h;
  }

  double hessian_norm_bound() const override { return bound_; }

 private:
  Matrix features_;
  Vector labels_;
  double ridge_;
  double bound_;
};

class LeastSquaresOracle final : public SampleOracle {
 public:
  LeastSquaresOracle(Matrix features, Vector labels)
      : features_(std::move(features)), labels_(std::move(labels)) {
    double max_sq = 0.0;
    for (Eigen::Index j = 0; j < features_.rows(); ++j)
      max_sq = std::max(max_sq, features_.row(j).squaredNorm());
    bound_ = max_sq;
  }

  double value(int j, const Vector& x) const override {
    const double r = features_.row(j).dot(x) - labels_[j];
    return 0.5 * r * r;
  }

  Vector gradient(int j, const Vector& x) const override {
    const double r = features_.row(j).dot(x) - labels_[j];
    return r * features_.row(j).transpose();
  }

  Matrix hessian(int j, const Vector&) const override {
    return features_.row(j).transpose() * features_.row(j);
  }

  double hessian_norm_bound() const override { return bound_; }

 private:
  Matrix features_;
  Vector labels_;
  double bound_;
};

class QuadraticOracle final : public SampleOracle {
 public:
  explicit QuadraticOracle(Vector center) : center_(std::move(center)) {}

  double value(int, const Vector& x) const override {
    return 0.5 * (x - center_).squaredNorm();
  }

  Vector gradient(int, const Vector& x) const override { return x - center_; }

  Matrix hessian(int, const Vector& x) const override {
    return Matrix::Identity(x.size(), x.size());
  }

  double hessian_norm_bound() const override { return 1.0; }

 private:
  Vector center_;
};

}  // namespace

std::vector<Dataset> make_synthetic_classification(int dimension, int samples,
                                                   int components,
                                                   std::uint64_t seed) {
  if (dimension < 2) throw InputError("synthetic data needs dimension >= 2");
  if (samples < 10) throw InputError("synthetic data needs at least 10 samples");
  if (components < 1) throw InputError("synthetic data needs components >= 1");

  std::mt19937_64 rng(seed);
  const int n_features = dimension - 1;  // trailing intercept column
  const int positives = (samples + 1) / 2;
  // Feature rows are normalized to O(1) Euclidean norm, matching the scale
  // of unit-normalized dense classification data.
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_features));

  std::vector<Dataset> out;
  out.reserve(static_cast<std::size_t>(components));
  for (int c = 0; c < components; ++c) {
    const Vector center = 1.5 * unit_sphere_vector(rng, n_features);
    Dataset d;
    d.features.resize(samples, dimension);
    d.labels.resize(samples);
    for (int j = 0; j < samples; ++j) {
      const double label = j < positives ? 1.0 : -1.0;
      d.labels[j] = label;
      for (int i = 0; i < n_features; ++i)
        d.features(j, i) = scale * (label * center[i] + standard_normal(rng));
      d.features(j, n_features) = 1.0;
    }
    out.push_back(std::move(d));
  }
  return out;
}

MultiObjectiveProblem make_logistic_problem(std::vector<Dataset> data,
                                            std::vector<double> ridge) {
  if (data.empty()) throw InputError("logistic problem needs data");
  if (ridge.size() != data.size())
    throw InputError("one ridge coefficient per component required");
  const auto rows = data.front().features.rows();
  const auto cols = data.front().features.cols();
  std::vector<std::shared_ptr<const SampleOracle>> comps;
  for (std::size_t i = 0; i < data.size(); ++i) {
    check_dataset(data[i], "logistic");
    if (data[i].features.rows() != rows)
      throw InputError("all components must share the sample count");
    if (data[i].features.cols() != cols)
      throw InputError("all components must share the feature dimension");
    comps.push_back(std::make_shared<LogisticOracle>(
        std::move(data[i].features), std::move(data[i].labels), ridge[i]));
  }
  return MultiObjectiveProblem(static_cast<int>(cols), static_cast<int>(rows),
                               std::move(comps));
}

MultiObjectiveProblem make_least_squares_problem(std::vector<Dataset> data) {
  if (data.empty()) throw InputError("least-squares problem needs data");
  const auto rows = data.front().features.rows();
  const auto cols = data.front().features.cols();
  std::vector<std::shared_ptr<const SampleOracle>> comps;
  for (auto& d : data) {
    check_dataset(d, "least-squares");
    if (d.features.rows() != rows)
      throw InputError("all components must share the sample count");
    if (d.features.cols() != cols)
      throw InputError("all components must share the feature dimension");
    comps.push_back(std::make_shared<LeastSquaresOracle>(std::move(d.features),
                                                         std::move(d.labels)));
  }
  return MultiObjectiveProblem(static_cast<int>(cols), static_cast<int>(rows),
                               std::move(comps));
}

MultiObjectiveProblem make_mixed_problem(Dataset logistic_data, double ridge,
                                         Dataset least_squares_data) {
  check_dataset(logistic_data, "mixed");
  check_dataset(least_squares_data, "mixed");
  if (logistic_data.features.rows() != least_squares_data.features.rows())
    throw InputError("mixed components must share the sample count");
  if (logistic_data.features.cols() != least_squares_data.features.cols())
    throw InputError("mixed components must share the feature dimension");
  const auto rows = logistic_data.features.rows();
  const auto cols = logistic_data.features.cols();
  std::vector<std::shared_ptr<const SampleOracle>> comps;
  comps.push_back(std::make_shared<LogisticOracle>(
      std::move(logistic_data.features), std::move(logistic_data.labels), ridge));
  comps.push_back(std::make_shared<LeastSquaresOracle>(
      std::move(least_squares_data.features),
      std::move(least_squares_data.labels)));
  return MultiObjectiveProblem(static_cast<int>(cols), static_cast<int>(rows),
                               std::move(comps));
}

MultiObjectiveProblem make_quadratic_problem(std::vector<Vector> centers) {
  if (centers.empty()) throw InputError("quadratic problem needs centers");
  const auto n = centers.front().size();
  std::vector<std::shared_ptr<const SampleOracle>> comps;
  for (auto& c : centers) {
    if (c.size() != n) throw InputError("all centers must share a dimension");
    comps.push_back(std::make_shared<QuadraticOracle>(std::move(c)));
  }
  return MultiObjectiveProblem(static_cast<int>(n), 1, std::move(comps));
}

}  // namespace asmop
