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

#ifndef SQUINT_DISTINGUISHABILITY_HPP
#define SQUINT_DISTINGUISHABILITY_HPP

#include <vector>

#include "squint/scenario.hpp"

namespace squint {

/// Overlap matrix with one common pairwise overlap:
/// V_ij = (1 - epsilon) + epsilon delta_ij. epsilon = 0 is the fully
/// indistinguishable (all-ones) limit, epsilon = 1 the fully
/// distinguishable (identity) one.
CMatrix homogeneous_overlap(double epsilon, int modes);

/// Doubled squeezing-scaled kernels of the two extremal overlaps, both
/// evaluated at the scenario's own loss point.
struct KernelSplit {
  CMatrix indistinguishable;
  CMatrix orthogonal;
};

/// Extremal kernel pair for a scenario whose overlap is
/// homogeneous_overlap(epsilon, M): the scenario's doubled kernel equals
/// (1 - epsilon) * indistinguishable + epsilon * orthogonal entrywise.
/// Throws when the scenario's overlap is not the homogeneous matrix for
/// the given epsilon.
KernelSplit convex_split(const Scenario& scenario, double epsilon);

/// Interference-free outcome weight for a uniform multiport
/// (|U_kl|^2 = 1/M) fed by squeezed_count equally squeezed inputs:
/// the coefficient of prod_l lambda_l^{m_l} in
/// prod_{k<=squeezed_count} (1 - tanh^2 r ((sum_l lambda_l) / M)^2)^{-1/2}.
/// Zero for odd pattern totals; in closed form for total 2m,
///
///   (squeezed_count/2)_m (tanh r / M)^{2m} (2m)! / (m! prod_l m_l!),
///
/// with (a)_m the rising factorial. The per-pattern multinomial keeps
/// collision patterns consistent with the series definition.
double classical_probability(const OutcomePattern& pattern, int squeezed_count,
                             int modes, double r);

/// One term of the factorized homogeneous-overlap decomposition.
struct DecompositionTerm {
  /// Pattern portion attributed to the interference-free factor.
  OutcomePattern noise_pattern;
  /// Coefficient of the noise pattern in det(I - eps K_orth)^{-1/2}.
  double classical_factor = 0.0;
  /// Coefficient of the remaining pattern in the noise-modified
  /// indistinguishable factor det(I - (1-eps) K_mixed)^{-1/2}.
  double coherent_factor = 0.0;
  double value = 0.0;
};

struct HomogeneousDecomposition {
  OutcomePattern pattern;
  double epsilon = 0.0;
  std::vector<DecompositionTerm> terms;
  /// Sum of term values, before any prefactor.
  double term_sum = 0.0;
  /// Vacuum coefficient times prod_l eta_l^{n_l}.
  double prefactor = 0.0;
  /// prefactor * term_sum; agrees with `direct` within numerical error.
  double total = 0.0;
  /// Same outcome probability computed through the direct expansion.
  double direct = 0.0;
};

/// Splits an outcome probability of a homogeneous-overlap scenario into
/// factorized terms: the determinant factorizes exactly as
/// det(I - K) = det(I - eps K_orth) det(I - (1-eps) K_mixed) with
/// K_mixed = (I - eps K_orth)^{-1} K_indist, so every outcome probability
/// is a sum over componentwise splits n = m + (n - m) of products of the
/// two factors' coefficients. Terms whose classical factor is a structural
/// zero are omitted (epsilon = 0 leaves the single m = 0 term).
HomogeneousDecomposition homogeneous_decomposition(const Scenario& scenario,
                                                   double epsilon,
                                                   const OutcomePattern& pattern);

/// Identical single-photon wave packets released at per-mode delays:
/// Gaussian envelope of width sigma_t around a carrier at omega0.
struct GaussianPulseModel {
  std::vector<double> delays;
  double sigma_t = 1.0;
  double omega0 = 0.0;
};

/// Overlap matrix of the pulse model:
/// V_kj = exp(-((T_k - T_j) / (2 sigma_t))^2 + i omega0 (T_k - T_j)).
CMatrix gaussian_overlap(const GaussianPulseModel& model);

/// Delays centered on zero with equal spacing between neighbours, ordered
/// earliest-last so that T_k - T_{k+1} = spacing.
std::vector<double> centered_equal_delays(int modes, double spacing);

struct DelayScanRow {
  double normalized_delay = 0.0;
  double omega0 = 0.0;
  OutcomePattern pattern;
  double probability = 0.0;
};

/// Sweeps the normalized neighbour delay dt = DeltaT / sigma_t: each grid
/// point rebuilds the overlap from centered equal delays (sigma_t = 1,
/// omega0 in units of 1 / sigma_t) and evaluates every requested pattern.
/// Rows appear in grid order, patterns in the order given.
std::vector<DelayScanRow> delay_scan(const Scenario& base,
                                     const std::vector<double>& normalized_delays,
                                     double omega0,
                                     const std::vector<OutcomePattern>& patterns);

/// Mean occupation of the effective single-mode thermal background that a
/// weakly distinguishable squeezed input leaves in the undetected internal
/// modes: n = u^2 / (1 - u^2) with u = sqrt(epsilon) tanh r, the occupation
/// of a thermal state whose squeeze-like parameter rt obeys
/// tanh rt = sqrt(epsilon) tanh r.
double effective_thermal_occupation(double epsilon, double r);

}  // namespace squint

#endif
