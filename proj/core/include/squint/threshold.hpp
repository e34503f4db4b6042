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

#ifndef SQUINT_THRESHOLD_HPP
#define SQUINT_THRESHOLD_HPP

#include <cstdint>

#include "squint/scenario.hpp"

namespace squint {

/// Largest clicked-set size accepted by the subset sum (2^|L| evaluations).
inline constexpr int kMaxClickModes = 20;

/// Probability that the detector on `mode` registers no click, with every
/// other detector unobserved (marginalized). Equals the generating function
/// evaluated with the queried mode's own efficiency and zero elsewhere.
double no_click_probability(const Scenario& scenario, int mode);

/// Marginal click probability on a single mode; complement of
/// no_click_probability.
double click_probability_single(const Scenario& scenario, int mode);

/// Probability of the exclusive click event: every mode listed in `clicked`
/// fires and every mode not listed stays silent. Computed by
/// inclusion-exclusion over subsets S of the clicked set,
///
///   P(L) = sum_{S subset of L} (-1)^|S| G(eta'(S)),
///
/// where eta'(S) keeps the scenario efficiency on S and on the unclicked
/// modes (vacuum projection at the detector's efficiency) and sets zero on
/// L \ S (unobserved). Mode indices are zero-based and must be distinct.
/// Clicked sets larger than kMaxClickModes throw CapacityError; this check
/// runs before index validation. Tiny negative results from the alternating
/// cancellation are clamped to zero within 1e-10.
double click_pattern_probability(const Scenario& scenario,
                                 const ClickPattern& clicked);

/// Efficiency point fed to the generating function for one term of the
/// subset sum: bit i of `subset_mask` selects clicked[i] into S. Exposed so
/// individual terms can be probed.
RVector subset_eta_assignment(const Scenario& scenario,
                              const ClickPattern& clicked,
                              std::uint64_t subset_mask);

}  // namespace squint

#endif
