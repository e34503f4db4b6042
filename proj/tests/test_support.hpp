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

#ifndef SQUINT_TESTS_TEST_SUPPORT_HPP
#define SQUINT_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "squint/scenario.hpp"
#include "squint/types.hpp"

namespace squint_tests {

// Frozen reference constants used across the suite.
inline constexpr double kTanh1 = 0.7615941559557649;
inline constexpr double kSech1 = 0.6480542736638855;
inline constexpr double kSech1Sq = 0.4199743416140261;
inline constexpr double kSechHalf = 0.8868188839700739;

inline squint::Scenario make_scenario(const squint::CMatrix& unitary,
                                      const std::vector<double>& r,
                                      const squint::CMatrix& overlap) {
  squint::Scenario scenario;
  scenario.unitary = unitary;
  scenario.squeezing.resize(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    scenario.squeezing[k] = {r[k], 0.0};
  }
  scenario.overlap = overlap;
  scenario.efficiencies = squint::RVector::Ones(unitary.rows());
  return scenario;
}

inline squint::Scenario make_scenario(const squint::CMatrix& unitary,
                                      const std::vector<double>& r,
                                      const squint::CMatrix& overlap,
                                      const std::vector<double>& eta) {
  squint::Scenario scenario = make_scenario(unitary, r, overlap);
  scenario.efficiencies =
      Eigen::Map<const squint::RVector>(eta.data(), eta.size());
  return scenario;
}

inline squint::CMatrix ones_overlap(int modes) {
  return squint::CMatrix::Ones(modes, modes);
}

inline squint::CMatrix identity_overlap(int modes) {
  return squint::CMatrix::Identity(modes, modes);
}

inline void append_patterns_with_total(int modes, int total,
                                       std::vector<int>& prefix,
                                       std::vector<squint::OutcomePattern>& out) {
  if (static_cast<int>(prefix.size()) == modes - 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int n = 0; n <= total; ++n) {
    prefix.push_back(n);
    append_patterns_with_total(modes, total - n, prefix, out);
    prefix.pop_back();
  }
}

/// Every outcome pattern over `modes` modes with the exact total given.
inline std::vector<squint::OutcomePattern> patterns_with_total(int modes,
                                                               int total) {
  std::vector<squint::OutcomePattern> out;
  std::vector<int> prefix;
  append_patterns_with_total(modes, total, prefix, out);
  return out;
}

/// Every outcome pattern over `modes` modes with total <= max_total.
inline std::vector<squint::OutcomePattern> patterns_up_to(int modes,
                                                          int max_total) {
  std::vector<squint::OutcomePattern> out;
  for (int total = 0; total <= max_total; ++total) {
    const auto block = patterns_with_total(modes, total);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

/// Central binomial single-mode ladder: P(2j) = sech(r) tanh(r)^{2j} C(2j,j)/4^j.
inline double single_mode_reference(double r, int n) {
  if (n % 2 != 0) return 0.0;
  const int j = n / 2;
  double binom = 1.0;
  for (int i = 1; i <= j; ++i) {
    binom *= static_cast<double>(j + i) / static_cast<double>(i);
  }
  const double t = std::tanh(r);
  return (1.0 / std::cosh(r)) * std::pow(t, 2 * j) * binom /
         std::pow(4.0, j);
}

}  // namespace squint_tests

#endif
