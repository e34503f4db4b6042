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

#include "squint/pnr.hpp"

#include <cmath>

#include "squint/generating_function.hpp"

namespace squint {

namespace {

constexpr double kCoefficientImagTol = 1e-10;
constexpr double kNegativeClampTol = 1e-10;

void check_pattern(const Scenario& scenario, const OutcomePattern& pattern,
                   int capacity) {
  if (static_cast<int>(pattern.size()) != scenario.modes()) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "pattern length disagrees with the mode count");
  }
  for (int n : pattern) {
    if (n < 0) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "pattern counts must be non-negative");
    }
  }
  if (pattern_total(pattern) > capacity) {
    throw CapacityError(CapacityError::Kind::capacity_exceeded,
                        "pattern total exceeds the photon capacity");
  }
}

/// Extracts a probability from a shifted-expansion coefficient: applies the
/// eta^n prefactor, checks realness, clamps tiny negatives.
double probability_from_coefficient(Complex coefficient,
                                    const Scenario& scenario,
                                    const OutcomePattern& pattern) {
  if (std::abs(coefficient.imag()) > kCoefficientImagTol) {
    throw NumericFault("probability coefficient has a non-real part");
  }
  double value = coefficient.real();
  for (int l = 0; l < static_cast<int>(pattern.size()); ++l) {
    for (int p = 0; p < pattern[l]; ++p) {
      value *= scenario.efficiencies[l];
    }
  }
  if (value < 0.0) {
    if (value < -kNegativeClampTol) {
      throw NumericFault("probability is negative beyond tolerance");
    }
    value = 0.0;  // rounding residue of a structural zero
  }
  return value;
}

}  // namespace

double ProbabilityTable::sum() const {
  double total = 0.0;
  double compensation = 0.0;
  for (const auto& [pattern, value] : probabilities) {
    double y = value - compensation;
    double t = total + y;
    compensation = (t - total) - y;
    total = t;
  }
  return total;
}

double ProbabilityTable::residual() const { return 1.0 - sum(); }

double probability(const Scenario& scenario, const OutcomePattern& pattern,
                   int capacity) {
  validate_scenario(scenario);
  check_pattern(scenario, pattern, capacity);
  RVector base = RVector::Ones(scenario.modes()) - scenario.efficiencies;
  TruncatedSeries expansion = expand_generating_function_shifted(
      scenario, base, pattern, pattern_total(pattern));
  return probability_from_coefficient(expansion.coefficient(pattern),
                                      scenario, pattern);
}

ProbabilityTable distribution(const Scenario& scenario, int max_total,
                              int capacity) {
  validate_scenario(scenario);
  if (max_total < 0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "max_total must be non-negative");
  }
  if (max_total > capacity) {
    throw CapacityError(CapacityError::Kind::capacity_exceeded,
                        "max_total exceeds the photon capacity");
  }
  const int m = scenario.modes();
  RVector base = RVector::Ones(m) - scenario.efficiencies;
  std::vector<int> caps(m, max_total);
  TruncatedSeries expansion =
      expand_generating_function_shifted(scenario, base, caps, max_total);

  ProbabilityTable table;
  table.modes = m;
  table.max_total = max_total;
  OutcomePattern pattern(m, 0);
  // Enumerates all patterns with total <= max_total in lexicographic order.
  auto enumerate = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == m) {
      table.probabilities[pattern] = probability_from_coefficient(
          expansion.coefficient(pattern), scenario, pattern);
      return;
    }
    for (int n = 0; n <= remaining; ++n) {
      pattern[mode] = n;
      self(self, mode + 1, remaining - n);
    }
    pattern[mode] = 0;
  };
  enumerate(enumerate, 0, max_total);
  return table;
}

}  // namespace squint
