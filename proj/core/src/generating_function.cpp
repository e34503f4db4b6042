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

#include "squint/generating_function.hpp"

#include <cmath>

#include <Eigen/LU>

namespace squint {

namespace {

constexpr double kEtaExcursion = 0.05;
constexpr double kDeterminantImagTol = 1e-10;

}  // namespace

SeriesMatrix squeezed_kernel_series(const Scenario& scenario,
                                    const RVector& base_lambda,
                                    const std::vector<int>& caps,
                                    int total_cap) {
  const int m = scenario.modes();
  CVector root = squeeze_amplitude_roots(scenario);
  SeriesMatrix kernel(m, m, caps, total_cap);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      const Complex scale =
          root[k] * std::conj(root[j]) * scenario.overlap(k, j);
      if (scale == Complex(0, 0)) continue;
      TruncatedSeries& entry = kernel.at(k, j);
      Complex base_value(0, 0);
      for (int l = 0; l < m; ++l) {
        const Complex mix = scenario.unitary(k, l) *
                            std::conj(scenario.unitary(j, l)) * scale;
        base_value += mix * base_lambda[l];
        entry.add_term(MultiIndex::unit(m, l), mix);
      }
      entry.add_term(MultiIndex::zeros(m), base_value);
      entry.prune_zeros();
    }
  }
  return kernel;
}

SeriesMatrix doubled_kernel_series(const SeriesMatrix& kernel) {
  const int m = kernel.rows();
  SeriesMatrix conj = kernel.conjugated();
  SeriesMatrix doubled(2 * m, 2 * m, kernel.caps(), kernel.total_cap());
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      doubled.at(k, m + j) = kernel.at(k, j);
      doubled.at(m + k, j) = conj.at(k, j);
    }
  }
  return doubled;
}

TruncatedSeries expand_generating_function_shifted(
    const Scenario& scenario, const RVector& base_lambda,
    const std::vector<int>& caps, int total_cap) {
  validate_scenario(scenario);
  const int m = scenario.modes();
  if (static_cast<int>(caps.size()) != m || base_lambda.size() != m) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "caps and base point must have one entry per mode");
  }
  SeriesMatrix kernel =
      squeezed_kernel_series(scenario, base_lambda, caps, total_cap);
  SeriesMatrix paired = kernel * kernel.conjugated();
  TruncatedSeries log_det = log_det_one_minus(paired);
  const Complex log_const = log_det.constant_term();
  log_det.add_term(MultiIndex::zeros(m), -log_const);
  log_det.prune_zeros();
  TruncatedSeries expansion = series_exp(log_det * Complex(-0.5, 0));
  const Complex prefactor =
      vacuum_coefficient(scenario) * std::exp(-0.5 * log_const);
  return expansion * prefactor;
}

TruncatedSeries expand_generating_function(const Scenario& scenario,
                                           const std::vector<int>& caps,
                                           int total_cap) {
  return expand_generating_function_shifted(
      scenario, RVector::Zero(scenario.modes()), caps, total_cap);
}

TruncatedSeries expand_generating_function(const Scenario& scenario,
                                           const std::vector<int>& caps) {
  int sum = 0;
  for (int cap : caps) sum += cap;
  return expand_generating_function(scenario, caps, sum);
}

double evaluate_generating_function(const Scenario& scenario,
                                    const RVector& eta_point) {
  validate_scenario(scenario);
  const int m = scenario.modes();
  if (eta_point.size() != m) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "efficiency point must have one entry per mode");
  }
  for (int l = 0; l < m; ++l) {
    if (!std::isfinite(eta_point[l]) || eta_point[l] < -kEtaExcursion ||
        eta_point[l] > 1.0 + kEtaExcursion) {
      throw ValidationError(ValidationError::Kind::bad_efficiency,
                            "efficiency point outside the supported range");
    }
  }
  RVector lambda = RVector::Ones(m) - eta_point;
  CMatrix squeezed = squeezed_kernel_at(scenario, lambda);
  CMatrix paired =
      CMatrix::Identity(m, m) - squeezed * squeezed.conjugate();
  Complex det = Eigen::PartialPivLU<CMatrix>(paired).determinant();
  if (std::abs(det.imag()) >
      kDeterminantImagTol * std::max(1.0, std::abs(det.real()))) {
    throw NumericFault("generating-function determinant is not real");
  }
  if (det.real() <= 0.0) {
    throw NumericFault("generating-function determinant is not positive");
  }
  return vacuum_coefficient(scenario) / std::sqrt(det.real());
}

}  // namespace squint
