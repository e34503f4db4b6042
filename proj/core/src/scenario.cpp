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

#include "squint/scenario.hpp"

#include <cmath>
#include <iostream>

#include <Eigen/Eigenvalues>

namespace squint {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kHermitianTol = 1e-12;
constexpr double kUnitDiagTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kOverlapMagnitudeTol = 1e-12;

}  // namespace

int pattern_total(const OutcomePattern& pattern) {
  int total = 0;
  for (int n : pattern) total += n;
  return total;
}

void validate_overlap_matrix(const CMatrix& overlap) {
  const int m = static_cast<int>(overlap.rows());
  if (overlap.cols() != m || m < 1) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "overlap matrix must be square and non-empty");
  }
  double herm = (overlap - overlap.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw ValidationError(ValidationError::Kind::non_gram,
                          "overlap matrix is not Hermitian");
  }
  for (int k = 0; k < m; ++k) {
    if (std::abs(overlap(k, k) - Complex(1, 0)) > kUnitDiagTol) {
      throw ValidationError(ValidationError::Kind::non_gram,
                            "overlap matrix diagonal must be 1");
    }
    for (int j = 0; j < m; ++j) {
      if (std::abs(overlap(k, j)) > 1.0 + kOverlapMagnitudeTol) {
        throw ValidationError(ValidationError::Kind::non_gram,
                              "overlap entries cannot exceed unit magnitude");
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eigs(overlap,
                                              Eigen::EigenvaluesOnly);
  if (eigs.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw ValidationError(ValidationError::Kind::non_gram,
                          "overlap matrix is not positive semidefinite");
  }
}

void validate_scenario(const Scenario& scenario) {
  const int m = scenario.modes();
  if (m < 1) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "scenario needs at least one mode");
  }
  if (m > kMaxModes) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "scenario exceeds the supported mode count");
  }
  if (m > kSoftModeLimit) {
    std::cerr << "squint: note: " << m
              << " modes; expansions above " << kSoftModeLimit
              << " modes can be slow\n";
  }
  if (scenario.unitary.cols() != m ||
      static_cast<int>(scenario.squeezing.size()) != m ||
      scenario.overlap.rows() != m || scenario.overlap.cols() != m ||
      scenario.efficiencies.size() != m) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "scenario field dimensions disagree");
  }
  double unit_dev = (scenario.unitary * scenario.unitary.adjoint() -
                     CMatrix::Identity(m, m))
                        .cwiseAbs()
                        .maxCoeff();
  if (unit_dev > kUnitaryTol) {
    throw ValidationError(ValidationError::Kind::non_unitary,
                          "interferometer matrix is not unitary");
  }
  for (const SqueezeParams& sq : scenario.squeezing) {
    if (!std::isfinite(sq.r) || sq.r < 0.0 || !std::isfinite(sq.theta)) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "squeezing parameters must be finite with r >= 0");
    }
  }
  for (int l = 0; l < m; ++l) {
    double eta = scenario.efficiencies[l];
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
      throw ValidationError(ValidationError::Kind::bad_efficiency,
                            "efficiencies must lie in [0, 1]");
    }
  }
  validate_overlap_matrix(scenario.overlap);
}

CVector squeeze_amplitudes(const Scenario& scenario) {
  const int m = scenario.modes();
  CVector s(m);
  for (int k = 0; k < m; ++k) {
    s[k] = std::polar(std::tanh(scenario.squeezing[k].r),
                      scenario.squeezing[k].theta);
  }
  return s;
}

CVector squeeze_amplitude_roots(const Scenario& scenario) {
  const int m = scenario.modes();
  CVector root(m);
  for (int k = 0; k < m; ++k) {
    root[k] = std::polar(std::sqrt(std::tanh(scenario.squeezing[k].r)),
                         0.5 * scenario.squeezing[k].theta);
  }
  return root;
}

double vacuum_coefficient(const Scenario& scenario) {
  double c = 1.0;
  for (const SqueezeParams& sq : scenario.squeezing) {
    double t = std::tanh(sq.r);
    c *= std::sqrt(1.0 - t * t);
  }
  return c;
}

CMatrix detection_kernel_at(const Scenario& scenario, const RVector& lambda) {
  const int m = scenario.modes();
  if (lambda.size() != m) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "loss point dimension disagrees with the scenario");
  }
  CMatrix loss = lambda.cast<Complex>().asDiagonal();
  CMatrix transformed = scenario.unitary * loss * scenario.unitary.adjoint();
  return transformed.cwiseProduct(scenario.overlap);
}

CMatrix detection_kernel(const Scenario& scenario) {
  RVector lambda = RVector::Ones(scenario.modes()) - scenario.efficiencies;
  return detection_kernel_at(scenario, lambda);
}

CMatrix kernel_mode_component(const Scenario& scenario, int mode) {
  const int m = scenario.modes();
  if (mode < 0 || mode >= m) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "kernel component mode index out of range");
  }
  CMatrix rank_one =
      scenario.unitary.col(mode) * scenario.unitary.col(mode).adjoint();
  return rank_one.cwiseProduct(scenario.overlap);
}

CMatrix squeezed_kernel_at(const Scenario& scenario, const RVector& lambda) {
  CVector root = squeeze_amplitude_roots(scenario);
  CMatrix kernel = detection_kernel_at(scenario, lambda);
  return root.asDiagonal() * kernel * root.conjugate().asDiagonal();
}

CMatrix squeezed_kernel(const Scenario& scenario) {
  RVector lambda = RVector::Ones(scenario.modes()) - scenario.efficiencies;
  return squeezed_kernel_at(scenario, lambda);
}

CMatrix doubled_kernel(const CMatrix& squeezed) {
  const int m = static_cast<int>(squeezed.rows());
  CMatrix block = CMatrix::Zero(2 * m, 2 * m);
  block.topRightCorner(m, m) = squeezed;
  block.bottomLeftCorner(m, m) = squeezed.conjugate();
  return block;
}

}  // namespace squint
