// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

/// Division by a jet whose value is (numerically) zero, i.e. evaluation on a pole.
struct DivisionByZeroJet : std::runtime_error {
  explicit DivisionByZeroJet(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of a function (sqrt/log of non-positive value, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation point outside the admissible domain of a surface family or transform.
struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::invalid_argument {
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Metric determinant below threshold; the curvature pipeline refuses to continue.
struct SingularMetric : std::runtime_error {
  explicit SingularMetric(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minsurf
