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

#include "squint/hafnian.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace squint {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kLimitTol = 1e-12;

Complex matching_sum(const CMatrix& matrix, std::vector<int>& alive) {
  if (alive.empty()) {
    return Complex(1.0, 0.0);
  }
  const int first = alive.front();
  Complex total(0.0, 0.0);
  for (std::size_t p = 1; p < alive.size(); ++p) {
    const int partner = alive[p];
    std::vector<int> rest;
    rest.reserve(alive.size() - 2);
    for (std::size_t q = 1; q < alive.size(); ++q) {
      if (q != p) {
        rest.push_back(alive[q]);
      }
    }
    total += matrix(first, partner) * matching_sum(matrix, rest);
  }
  return total;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "symmetric matrix must be square");
  }
  if (matrix_.rows() > 0 &&
      (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "matrix is not symmetric");
  }
}

Complex hafnian(const SymmetricMatrix& matrix) {
  const int dim = matrix.dim();
  if (dim > kMaxHafnianDim) {
    throw CapacityError(CapacityError::Kind::hafnian_too_large,
                        "hafnian dimension exceeds brute-force limit");
  }
  if (dim == 0) {
    return Complex(1.0, 0.0);
  }
  if (dim % 2 != 0) {
    return Complex(0.0, 0.0);
  }
  std::vector<int> alive(static_cast<std::size_t>(dim));
  std::iota(alive.begin(), alive.end(), 0);
  return matching_sum(matrix.matrix(), alive);
}

CMatrix repeat_rows_cols(const CMatrix& matrix,
                         const std::vector<int>& repeats) {
  if (static_cast<Eigen::Index>(repeats.size()) != matrix.rows()) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "repeat vector length must match matrix dimension");
  }
  std::vector<int> index_map;
  for (std::size_t i = 0; i < repeats.size(); ++i) {
    if (repeats[i] < 0) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "repeat counts must be non-negative");
    }
    for (int c = 0; c < repeats[i]; ++c) {
      index_map.push_back(static_cast<int>(i));
    }
  }
  const auto out_dim = static_cast<Eigen::Index>(index_map.size());
  CMatrix out(out_dim, out_dim);
  for (Eigen::Index a = 0; a < out_dim; ++a) {
    for (Eigen::Index b = 0; b < out_dim; ++b) {
      out(a, b) = matrix(index_map[static_cast<std::size_t>(a)],
                         index_map[static_cast<std::size_t>(b)]);
    }
  }
  return out;
}

double indistinguishable_probability(const Scenario& scenario,
                                     const OutcomePattern& pattern) {
  validate_scenario(scenario);
  const int modes = scenario.modes();
  if (static_cast<int>(pattern.size()) != modes) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "pattern length must match mode count");
  }
  for (int n : pattern) {
    if (n < 0) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "pattern entries must be non-negative");
    }
  }
  const double overlap_gap =
      (scenario.overlap - CMatrix::Ones(modes, modes)).cwiseAbs().maxCoeff();
  if (overlap_gap > kLimitTol) {
    throw ValidationError(
        ValidationError::Kind::bad_argument,
        "matched-pair route requires fully indistinguishable sources");
  }
  for (int k = 0; k < modes; ++k) {
    if (std::abs(scenario.efficiencies[k] - 1.0) > kLimitTol) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "matched-pair route requires unit efficiencies");
    }
  }
  const int total = pattern_total(pattern);
  if (total > kMaxHafnianDim) {
    throw CapacityError(CapacityError::Kind::hafnian_too_large,
                        "pattern total exceeds brute-force hafnian limit");
  }

  const CVector amplitudes = squeeze_amplitudes(scenario);
  const CMatrix pair_matrix = scenario.unitary.transpose() *
                              amplitudes.asDiagonal().toDenseMatrix() *
                              scenario.unitary;
  const CMatrix reduced = repeat_rows_cols(pair_matrix, pattern);
  const Complex haf = hafnian(SymmetricMatrix(reduced));

  double denom = 1.0;
  for (int n : pattern) {
    for (int j = 2; j <= n; ++j) {
      denom *= static_cast<double>(j);
    }
  }
  return vacuum_coefficient(scenario) * std::norm(haf) / denom;
}

}  // namespace squint
