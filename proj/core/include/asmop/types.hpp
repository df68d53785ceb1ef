// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmop {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Index multiset drawn from one component's sample set; repetition allowed,
/// averages divide by the multiset length.
using IndexSet = std::vector<int>;

/// One index multiset per objective component.
using SampleTuple = std::vector<IndexSet>;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid caller-supplied argument or configuration.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Non-finite quantity produced by an oracle evaluation.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, int component, int sample_index)
      : Error(what), component_(component), sample_index_(sample_index) {}

  int component() const noexcept { return component_; }
  int sample_index() const noexcept { return sample_index_; }

 private:
  int component_;
  int sample_index_;
};

/// Internal consistency failure, e.g. a violated decrease guarantee.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace asmop
