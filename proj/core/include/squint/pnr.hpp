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

#ifndef SQUINT_PNR_HPP
#define SQUINT_PNR_HPP

#include <map>

#include "squint/scenario.hpp"

namespace squint {

/// Default cap on the total photon number of a single request.
inline constexpr int kDefaultTotalCapacity = 16;

/// Exact outcome probabilities for every pattern with total <= max_total,
/// stored in lexicographic pattern order.
struct ProbabilityTable {
  int modes = 0;
  int max_total = 0;
  std::map<OutcomePattern, double> probabilities;

  /// Sum of the stored probabilities.
  double sum() const;
  /// Mass not covered by the stored patterns: 1 - sum().
  double residual() const;
};

/// Probability of detecting exactly the photon pattern `pattern`, with the
/// scenario's per-mode efficiencies applied exactly (closed-form binomial
/// thinning via a shifted expansion; no thinning truncation). Throws
/// CapacityError when the pattern total exceeds capacity.
double probability(const Scenario& scenario, const OutcomePattern& pattern,
                   int capacity = kDefaultTotalCapacity);

/// All outcome probabilities with total <= max_total from one shared
/// expansion of the generating function.
ProbabilityTable distribution(const Scenario& scenario, int max_total,
                              int capacity = kDefaultTotalCapacity);

}  // namespace squint

#endif
