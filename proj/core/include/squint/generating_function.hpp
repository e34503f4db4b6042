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

#ifndef SQUINT_GENERATING_FUNCTION_HPP
#define SQUINT_GENERATING_FUNCTION_HPP

#include <vector>

#include "squint/scenario.hpp"
#include "squint/series.hpp"

namespace squint {

/// Multivariate Taylor expansion, around lambda = 0, of the outcome
/// generating function
///
///   G(lambda) = c  det(I - A(lambda) conj(A(lambda)))^{-1/2},
///
/// where A is the squeezing-scaled detection kernel, linear in the formal
/// per-output-mode loss variables lambda_l, and c is the vacuum coefficient.
/// The coefficient of prod_l lambda_l^{n_l} is the probability of counting
/// n_l photons in output mode l at unit efficiency.
TruncatedSeries expand_generating_function(const Scenario& scenario,
                                           const std::vector<int>& caps);
TruncatedSeries expand_generating_function(const Scenario& scenario,
                                           const std::vector<int>& caps,
                                           int total_cap);

/// Same expansion with lambda = base + delta, as a series in the shifts
/// delta. Expanding around base = 1 - efficiencies turns the coefficients
/// into efficiency-thinned probabilities (up to the eta^n prefactor applied
/// by the probability layer).
TruncatedSeries expand_generating_function_shifted(
    const Scenario& scenario, const RVector& base_lambda,
    const std::vector<int>& caps, int total_cap);

/// Numeric value of the generating function at an efficiency point
/// (lambda = 1 - eta entrywise). Accepts small excursions beyond [0, 1] per
/// coordinate (within 0.05) so finite-difference probes of the derivatives
/// remain possible; larger excursions throw ValidationError.
/// The defining determinant is real positive for every valid scenario;
/// violations beyond tolerance raise NumericFault.
double evaluate_generating_function(const Scenario& scenario,
                                    const RVector& eta_point);

/// Squeezing-scaled kernel with entries linear in the shift variables:
/// entry (k, j) = root_k conj(root_j) V_kj sum_l U_kl conj(U_jl)
/// (base_l + delta_l). Building block for the expansion above and for the
/// factorized overlap decompositions.
SeriesMatrix squeezed_kernel_series(const Scenario& scenario,
                                    const RVector& base_lambda,
                                    const std::vector<int>& caps,
                                    int total_cap);

/// Doubled block arrangement [[0, K], [conj K, 0]] of an M x M kernel
/// series, matching the numeric doubled_kernel layout.
SeriesMatrix doubled_kernel_series(const SeriesMatrix& kernel);

}  // namespace squint

#endif
