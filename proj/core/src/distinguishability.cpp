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

#include "squint/distinguishability.hpp"

#include <cmath>
#include <complex>

#include <Eigen/LU>

#include "squint/generating_function.hpp"
#include "squint/pnr.hpp"

namespace squint {
namespace {

constexpr double kHomogeneousMatchTol = 1e-12;
constexpr double kCoefficientImagTol = 1e-10;

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon > 1.0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "distinguishability degree must lie in [0, 1]");
  }
}

void check_homogeneous_scenario(const Scenario& scenario, double epsilon) {
  const CMatrix expected = homogeneous_overlap(epsilon, scenario.modes());
  const double gap = (scenario.overlap - expected).cwiseAbs().maxCoeff();
  if (gap > kHomogeneousMatchTol) {
    throw ValidationError(
        ValidationError::Kind::bad_argument,
        "scenario overlap is not homogeneous at the given degree");
  }
}

double real_coefficient(Complex value, const char* what) {
  if (std::abs(value.imag()) >
      kCoefficientImagTol * std::max(1.0, std::abs(value.real()))) {
    throw NumericFault(what);
  }
  return value.real();
}

/// det(I - A)^{-1/2} as a series, constant part handled through the
/// principal logarithm.
TruncatedSeries inverse_sqrt_det(const SeriesMatrix& a, int variables) {
  TruncatedSeries log_det = log_det_one_minus(a);
  const Complex log_const = log_det.constant_term();
  log_det.add_term(MultiIndex::zeros(variables), -log_const);
  log_det.prune_zeros();
  TruncatedSeries series = series_exp(log_det * Complex(-0.5, 0));
  return series * std::exp(-0.5 * log_const);
}

}  // namespace

CMatrix homogeneous_overlap(double epsilon, int modes) {
  check_epsilon(epsilon);
  if (modes < 1) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "mode count must be positive");
  }
  CMatrix overlap =
      CMatrix::Constant(modes, modes, Complex(1.0 - epsilon, 0.0));
  overlap.diagonal().setConstant(Complex(1.0, 0.0));
  return overlap;
}

KernelSplit convex_split(const Scenario& scenario, double epsilon) {
  validate_scenario(scenario);
  check_homogeneous_scenario(scenario, epsilon);
  const int m = scenario.modes();
  Scenario indist = scenario;
  indist.overlap = CMatrix::Ones(m, m);
  Scenario orth = scenario;
  orth.overlap = CMatrix::Identity(m, m);
  return KernelSplit{doubled_kernel(squeezed_kernel(indist)),
                     doubled_kernel(squeezed_kernel(orth))};
}

double classical_probability(const OutcomePattern& pattern, int squeezed_count,
                             int modes, double r) {
  if (modes < 1 || static_cast<int>(pattern.size()) != modes) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "pattern length must match mode count");
  }
  if (squeezed_count < 0 || squeezed_count > modes) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "squeezed input count must lie in [0, modes]");
  }
  if (!std::isfinite(r) || r < 0.0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "squeezing magnitude must be non-negative");
  }
  for (int entry : pattern) {
    if (entry < 0) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "pattern entries must be non-negative");
    }
  }
  const int total = pattern_total(pattern);
  if (total % 2 != 0) {
    return 0.0;
  }
  const int pairs = total / 2;
  double rising = 1.0;
  for (int j = 0; j < pairs; ++j) {
    rising *= 0.5 * squeezed_count + j;
  }
  double ratio = 1.0;
  for (int j = 2; j <= total; ++j) {
    ratio *= static_cast<double>(j);
  }
  for (int j = 2; j <= pairs; ++j) {
    ratio /= static_cast<double>(j);
  }
  for (int entry : pattern) {
    for (int j = 2; j <= entry; ++j) {
      ratio /= static_cast<double>(j);
    }
  }
  const double scale = std::pow(std::tanh(r) / modes, total);
  return rising * scale * ratio;
}

HomogeneousDecomposition homogeneous_decomposition(
    const Scenario& scenario, double epsilon, const OutcomePattern& pattern) {
  validate_scenario(scenario);
  check_homogeneous_scenario(scenario, epsilon);
  const int m = scenario.modes();
  if (static_cast<int>(pattern.size()) != m) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "pattern length must match mode count");
  }
  for (int entry : pattern) {
    if (entry < 0) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "pattern entries must be non-negative");
    }
  }
  const int total = pattern_total(pattern);
  if (total > kDefaultTotalCapacity) {
    throw CapacityError(CapacityError::Kind::capacity_exceeded,
                        "pattern total exceeds the expansion capacity");
  }

  const RVector base = RVector::Ones(m) - scenario.efficiencies;
  Scenario indist = scenario;
  indist.overlap = CMatrix::Ones(m, m);
  Scenario orth = scenario;
  orth.overlap = CMatrix::Identity(m, m);

  const SeriesMatrix doubled_orth =
      doubled_kernel_series(squeezed_kernel_series(orth, base, pattern, total));
  const SeriesMatrix doubled_indist = doubled_kernel_series(
      squeezed_kernel_series(indist, base, pattern, total));

  const SeriesMatrix scaled_orth = doubled_orth.scaled(Complex(epsilon, 0.0));
  const TruncatedSeries classical_series = inverse_sqrt_det(scaled_orth, m);

  const CMatrix constant = scaled_orth.constant_part();
  const Eigen::Index dim = constant.rows();
  Eigen::FullPivLU<CMatrix> lu(CMatrix::Identity(dim, dim) - constant);
  if (!lu.isInvertible()) {
    throw NumericFault("noise factor is singular at the expansion point");
  }
  const CMatrix inverse_constant = lu.inverse();
  const SeriesMatrix neumann_step =
      left_multiply(inverse_constant, scaled_orth.without_constant_part());
  SeriesMatrix mixed = left_multiply(inverse_constant, doubled_indist);
  SeriesMatrix power = mixed;
  for (int j = 1; j <= total; ++j) {
    power = neumann_step * power;
    mixed = mixed + power;
  }
  const TruncatedSeries coherent_series =
      inverse_sqrt_det(mixed.scaled(Complex(1.0 - epsilon, 0.0)), m);

  HomogeneousDecomposition out;
  out.pattern = pattern;
  out.epsilon = epsilon;

  std::vector<int> split(static_cast<std::size_t>(m), 0);
  std::vector<int> remainder(pattern);
  while (true) {
    const Complex classical = classical_series.coefficient(split);
    if (classical != Complex(0.0, 0.0)) {
      for (int l = 0; l < m; ++l) {
        remainder[l] = pattern[l] - split[l];
      }
      const Complex coherent = coherent_series.coefficient(remainder);
      if (coherent != Complex(0.0, 0.0)) {
        DecompositionTerm term;
        term.noise_pattern = split;
        term.classical_factor =
            real_coefficient(classical, "noise factor coefficient not real");
        term.coherent_factor = real_coefficient(
            coherent, "coherent factor coefficient not real");
        term.value = term.classical_factor * term.coherent_factor;
        out.terms.push_back(std::move(term));
      }
    }
    int cursor = m - 1;
    while (cursor >= 0 && split[cursor] == pattern[cursor]) {
      split[cursor] = 0;
      --cursor;
    }
    if (cursor < 0) {
      break;
    }
    ++split[cursor];
  }

  double sum = 0.0;
  for (const DecompositionTerm& term : out.terms) {
    sum += term.value;
  }
  out.term_sum = sum;
  double prefactor = vacuum_coefficient(scenario);
  for (int l = 0; l < m; ++l) {
    for (int c = 0; c < pattern[l]; ++c) {
      prefactor *= scenario.efficiencies[l];
    }
  }
  out.prefactor = prefactor;
  out.total = prefactor * sum;
  out.direct = probability(scenario, pattern);
  return out;
}

CMatrix gaussian_overlap(const GaussianPulseModel& model) {
  const int modes = static_cast<int>(model.delays.size());
  if (modes < 1) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "pulse model needs at least one delay");
  }
  if (!std::isfinite(model.sigma_t) || model.sigma_t <= 0.0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "pulse width must be positive");
  }
  if (!std::isfinite(model.omega0)) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "carrier frequency must be finite");
  }
  for (double delay : model.delays) {
    if (!std::isfinite(delay)) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "delays must be finite");
    }
  }
  CMatrix overlap(modes, modes);
  for (int k = 0; k < modes; ++k) {
    overlap(k, k) = Complex(1.0, 0.0);
    for (int j = 0; j < k; ++j) {
      const double gap = model.delays[k] - model.delays[j];
      const double damp = gap / (2.0 * model.sigma_t);
      const Complex value =
          std::exp(Complex(-damp * damp, model.omega0 * gap));
      overlap(k, j) = value;
      overlap(j, k) = std::conj(value);
    }
  }
  return overlap;
}

std::vector<double> centered_equal_delays(int modes, double spacing) {
  if (modes < 1) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "mode count must be positive");
  }
  std::vector<double> delays(static_cast<std::size_t>(modes));
  for (int k = 0; k < modes; ++k) {
    delays[static_cast<std::size_t>(k)] =
        (0.5 * (modes - 1) - k) * spacing;
  }
  return delays;
}

std::vector<DelayScanRow> delay_scan(
    const Scenario& base, const std::vector<double>& normalized_delays,
    double omega0, const std::vector<OutcomePattern>& patterns) {
  validate_scenario(base);
  std::vector<DelayScanRow> rows;
  rows.reserve(normalized_delays.size() * patterns.size());
  for (double delay : normalized_delays) {
    GaussianPulseModel model;
    model.delays = centered_equal_delays(base.modes(), delay);
    model.sigma_t = 1.0;
    model.omega0 = omega0;
    Scenario point = base;
    point.overlap = gaussian_overlap(model);
    for (const OutcomePattern& pattern : patterns) {
      DelayScanRow row;
      row.normalized_delay = delay;
      row.omega0 = omega0;
      row.pattern = pattern;
      row.probability = probability(point, pattern);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double effective_thermal_occupation(double epsilon, double r) {
  check_epsilon(epsilon);
  if (!std::isfinite(r) || r < 0.0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "squeezing magnitude must be non-negative");
  }
  const double u = std::tanh(r);
  const double weight = epsilon * u * u;
  return weight / (1.0 - weight);
}

}  // namespace squint
