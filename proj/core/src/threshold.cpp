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

#include "squint/threshold.hpp"

#include <bit>
#include <unordered_set>

#include "squint/generating_function.hpp"

namespace squint {
namespace {

constexpr double kClampTol = 1e-10;

void check_mode_index(const Scenario& scenario, int mode) {
  if (mode < 0 || mode >= scenario.modes()) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "mode index out of range");
  }
}

/// An all-zero efficiency point observes nothing, so the generating
/// function equals the total probability: exactly one.
double evaluate_term(const Scenario& scenario, const RVector& eta) {
  if ((eta.array() == 0.0).all()) {
    return 1.0;
  }
  return evaluate_generating_function(scenario, eta);
}

double clamp_probability(double value) {
  if (value < 0.0) {
    if (value < -kClampTol) {
      throw NumericFault("threshold probability below zero beyond tolerance");
    }
    return 0.0;
  }
  if (value > 1.0) {
    if (value > 1.0 + kClampTol) {
      throw NumericFault("threshold probability above one beyond tolerance");
    }
    return 1.0;
  }
  return value;
}

}  // namespace

double no_click_probability(const Scenario& scenario, int mode) {
  validate_scenario(scenario);
  check_mode_index(scenario, mode);
  RVector eta = RVector::Zero(scenario.modes());
  eta[mode] = scenario.efficiencies[mode];
  return clamp_probability(evaluate_term(scenario, eta));
}

double click_probability_single(const Scenario& scenario, int mode) {
  return clamp_probability(1.0 - no_click_probability(scenario, mode));
}

RVector subset_eta_assignment(const Scenario& scenario,
                              const ClickPattern& clicked,
                              std::uint64_t subset_mask) {
  RVector eta(scenario.modes());
  for (int k = 0; k < scenario.modes(); ++k) {
    eta[k] = scenario.efficiencies[k];
  }
  for (std::size_t i = 0; i < clicked.size(); ++i) {
    if ((subset_mask & (std::uint64_t{1} << i)) == 0) {
      eta[clicked[i]] = 0.0;
    }
  }
  return eta;
}

double click_pattern_probability(const Scenario& scenario,
                                 const ClickPattern& clicked) {
  if (static_cast<int>(clicked.size()) > kMaxClickModes) {
    throw CapacityError(CapacityError::Kind::too_many_clicks,
                        "clicked set exceeds subset-sum limit");
  }
  validate_scenario(scenario);
  std::unordered_set<int> seen;
  for (int mode : clicked) {
    check_mode_index(scenario, mode);
    if (!seen.insert(mode).second) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "clicked mode listed twice");
    }
  }

  const std::uint64_t subsets = std::uint64_t{1} << clicked.size();
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const RVector eta = subset_eta_assignment(scenario, clicked, mask);
    const double magnitude = evaluate_term(scenario, eta);
    const double sign = (std::popcount(mask) % 2 == 0) ? 1.0 : -1.0;
    const double y = sign * magnitude - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return clamp_probability(sum);
}

}  // namespace squint
