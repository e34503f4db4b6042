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

#ifndef SQUINT_VALIDATION_HPP
#define SQUINT_VALIDATION_HPP

#include <string>
#include <vector>

#include "squint/scenario.hpp"

namespace squint {

/// Outcome of one self-validation check.
struct CheckResult {
  std::string name;
  bool passed = false;
  /// Measured errors, tolerances, and any resolution notes; machine-greppable
  /// "key=value" fragments joined by "; ".
  std::string detail;
};

/// Runs the embedded cross-validation suite on fixed reference scenarios:
/// matching-sum consistency, oracle equivalence, forbidden-event structure,
/// normalization, homogeneous decomposition, the classical closed form
/// (including the prefactor resolution note), and threshold consistency.
/// Never throws for check failures; those are reported in the results.
std::vector<CheckResult> run_validation_suite();

/// Checks that can be evaluated on a user-provided scenario: vacuum
/// consistency against direct evaluation, truncated normalization (small
/// mode counts), and threshold completeness (small mode counts).
std::vector<CheckResult> scenario_checks(const Scenario& scenario);

/// True when every result passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace squint

#endif
