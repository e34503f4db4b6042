// Copyright 2026 The squint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQUINT_TYPES_HPP
#define SQUINT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace squint {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Photon counts per output mode.
using OutcomePattern = std::vector<int>;

/// Sorted, duplicate-free list of zero-based output modes that registered a click.
using ClickPattern = std::vector<int>;

/// Sum of the per-mode counts of a pattern.
int pattern_total(const OutcomePattern& pattern);

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scenario or argument violates a domain precondition.
class ValidationError : public Error {
 public:
  enum class Kind {
    non_unitary,
    non_gram,
    bad_efficiency,
    dimension_mismatch,
    bad_argument,
  };

  ValidationError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A request exceeds a configured resource limit.
class CapacityError : public Error {
 public:
  enum class Kind {
    capacity_exceeded,
    hafnian_too_large,
    too_many_clicks,
    cutoff_too_large,
  };

  CapacityError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Misuse of the truncated-series arithmetic.
class SeriesError : public Error {
 public:
  enum class Kind {
    cap_mismatch,
    nonzero_constant_term,
    singular_at_origin,
  };

  SeriesError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An internal numerical consistency check failed (e.g. a determinant that
/// must be positive came out non-positive). Indicates a bug or an input far
/// outside the supported regime, not a recoverable condition.
class NumericFault : public Error {
 public:
  using Error::Error;
};

}  // namespace squint

#endif
