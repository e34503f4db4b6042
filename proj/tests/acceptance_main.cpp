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

/// Acceptance suite: end-to-end checks of the library against independent
/// references. Each criterion prints one PASS or FAIL line with its measured
/// errors and elapsed time; the process exits nonzero when any criterion
/// fails. Tolerances and runtime budgets are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "squint/distinguishability.hpp"
#include "squint/fock_oracle.hpp"
#include "squint/hafnian.hpp"
#include "squint/pnr.hpp"
#include "squint/rng.hpp"
#include "squint/scenario.hpp"
#include "squint/series.hpp"
#include "squint/threshold.hpp"
#include "squint/types.hpp"
#include "squint/unitaries.hpp"
#include "squint/validation.hpp"

#include "test_support.hpp"

namespace {

using squint::CMatrix;
using squint::Complex;
using squint::OutcomePattern;
using squint::Scenario;
using squint_tests::make_scenario;
using squint_tests::ones_overlap;
using squint_tests::patterns_up_to;

struct CriterionResult {
  bool passed = false;
  std::string detail;
};

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

int pattern_total(const OutcomePattern& pattern) {
  int total = 0;
  for (int n : pattern) total += n;
  return total;
}

double sech(double r) { return 1.0 / std::cosh(r); }

/// Criterion 1: the vacuum outcome of any lossless scenario equals the
/// product of the per-source vacuum weights, independent of the
/// interferometer and of the overlap matrix.
CriterionResult vacuum_probability() {
  const double tol = 1e-12;
  double max_err = 0.0;

  std::vector<Scenario> scenarios;
  scenarios.push_back(
      make_scenario(squint::beamsplitter_unitary(), {1.0, 1.0}, ones_overlap(2)));
  scenarios.push_back(make_scenario(
      squint::tritter_unitary(), {0.7, 0.4, 0.9},
      squint::gaussian_overlap({squint::centered_equal_delays(3, 0.8), 1.0, 0.6})));
  scenarios.push_back(make_scenario(squint::haar_random_unitary(4, 41),
                                    {0.5, 0.25, 0.75, 0.3},
                                    squint::homogeneous_overlap(0.35, 4)));

  for (const Scenario& s : scenarios) {
    double expected = 1.0;
    for (const auto& sq : s.squeezing) expected *= sech(sq.r);
    const OutcomePattern vacuum(s.modes(), 0);
    const double p = squint::probability(s, vacuum);
    max_err = std::max(max_err, std::abs(p - expected));
    max_err = std::max(max_err, std::abs(p - squint::vacuum_coefficient(s)));
  }

  const double twin =
      squint::probability(scenarios.front(), OutcomePattern{0, 0});
  const double frozen = 0.4199743416140261;
  const double twin_err = std::abs(twin - frozen);
  max_err = std::max(max_err, twin_err);

  std::ostringstream detail;
  detail << "max_err=" << fmt(max_err) << " frozen_err=" << fmt(twin_err)
         << " tol=1e-12";
  return {max_err <= tol, detail.str()};
}

/// Criterion 2: for indistinguishable lossless scenarios every outcome
/// probability from the series engine matches the independent
/// matching-sum (pair-counting) route.
CriterionResult matching_sum_crosscheck() {
  const double tol = 1e-9;
  double max_err = 0.0;
  int compared = 0;

  for (int i = 0; i < 10; ++i) {
    const int modes = 2 + (i % 3);
    std::vector<double> r(modes);
    for (int k = 0; k < modes; ++k) {
      r[k] = 0.3 + 0.1 * ((i + 2 * k) % 8);
    }
    const Scenario s = make_scenario(squint::haar_random_unitary(modes, 211 + i),
                                     r, ones_overlap(modes));
    const squint::ProbabilityTable table = squint::distribution(s, 6);
    for (const auto& [pattern, p] : table.probabilities) {
      const double reference = squint::indistinguishable_probability(s, pattern);
      max_err = std::max(max_err, std::abs(p - reference));
      ++compared;
    }
  }

  std::ostringstream detail;
  detail << "max_err=" << fmt(max_err) << " tol=1e-9 patterns=" << compared;
  return {max_err <= tol, detail.str()};
}

/// Criterion 3: the series engine agrees with the brute-force Fock-basis
/// oracle on randomized scenarios covering Gaussian-pulse, homogeneous,
/// and random Gram overlaps, within max(1e-6, oracle truncation tail).
CriterionResult fock_oracle_equivalence() {
  double worst_err = 0.0;
  double worst_tol = 1e-6;
  bool all_within = true;
  int compared = 0;

  for (int i = 0; i < 20; ++i) {
    const int modes = 1 + (i % 3);
    squint::CounterRng rng(401 + i, 0);

    std::vector<double> r(modes);
    for (int k = 0; k < modes; ++k) {
      r[k] = 0.15 + 0.06 * ((i + k) % 11);
    }

    CMatrix overlap;
    switch (i % 3) {
      case 0: {
        std::vector<double> delays(modes);
        for (double& d : delays) d = 3.0 * (rng.next_unit() - 0.5);
        overlap = squint::gaussian_overlap({delays, 1.0, 1.5 * rng.next_unit()});
        break;
      }
      case 1:
        overlap = squint::homogeneous_overlap(0.05 + 0.9 * (i / 19.0), modes);
        break;
      default: {
        CMatrix phi(modes, modes);
        for (int a = 0; a < modes; ++a) {
          for (int b = 0; b < modes; ++b) phi(a, b) = rng.next_complex_normal();
          phi.row(a).normalize();
        }
        const CMatrix gram = phi * phi.adjoint();
        overlap = 0.5 * (gram + gram.adjoint());
        overlap.diagonal().setOnes();
        break;
      }
    }

    Scenario s = make_scenario(squint::haar_random_unitary(modes, 431 + i), r,
                               overlap);
    const bool lossy = (i % 5) == 4;
    if (lossy) {
      for (int l = 0; l < modes; ++l) {
        s.efficiencies(l) = 0.6 + 0.4 * rng.next_unit();
      }
    }

    const int cutoff = modes == 3 ? 8 : 10;
    const squint::ProbabilityTable oracle = squint::oracle_distribution(s, cutoff);
    const double tail = squint::oracle_truncation_tail(s, cutoff);
    const double tol = std::max(1e-6, tail);

    const squint::ProbabilityTable engine = squint::distribution(s, 4);
    for (const auto& [pattern, p] : engine.probabilities) {
      const double err = std::abs(p - oracle.probabilities.at(pattern));
      if (err > tol) all_within = false;
      if (err > worst_err) {
        worst_err = err;
        worst_tol = tol;
      }
      ++compared;
    }
  }

  std::ostringstream detail;
  detail << "worst_err=" << fmt(worst_err) << " its_tol=" << fmt(worst_tol)
         << " scenarios=20 patterns=" << compared;
  return {all_within, detail.str()};
}

/// Criterion 4: structurally forbidden outcomes vanish. A balanced
/// two-port with equal squeezing emits only equal pair counts; the
/// balanced three-port with equal squeezing forbids odd counts in the
/// first mode and unequal counts in the other two.
CriterionResult forbidden_events() {
  const Scenario twin =
      make_scenario(squint::beamsplitter_unitary(), {1.0, 1.0}, ones_overlap(2));
  double max_twin = 0.0;
  const squint::ProbabilityTable twin_table = squint::distribution(twin, 8);
  for (const auto& [pattern, p] : twin_table.probabilities) {
    if (pattern[0] != pattern[1]) max_twin = std::max(max_twin, p);
  }

  const Scenario three = make_scenario(squint::tritter_unitary(),
                                       {1.0, 1.0, 1.0}, ones_overlap(3));
  double max_three = 0.0;
  const squint::ProbabilityTable three_table = squint::distribution(three, 6);
  for (const auto& [pattern, p] : three_table.probabilities) {
    if (pattern[0] % 2 != 0 || pattern[1] != pattern[2]) {
      max_three = std::max(max_three, p);
    }
  }

  std::ostringstream detail;
  detail << "pair_max=" << fmt(max_twin) << " tol=1e-12 three_port_max="
         << fmt(max_three) << " tol=1e-10";
  return {max_twin <= 1e-12 && max_three <= 1e-10, detail.str()};
}

/// Criterion 5: delay-scan limits. Zero delay reproduces the
/// indistinguishable forbidden events, a ten-sigma delay reproduces the
/// fully distinguishable scenario, and the carrier detuning changes the
/// curves at intermediate delay.
CriterionResult delay_scan_limits() {
  const Scenario base =
      make_scenario(squint::beamsplitter_unitary(), {1.0, 1.0}, ones_overlap(2));
  const std::vector<OutcomePattern> patterns = patterns_up_to(2, 4);

  double forbidden_max = 0.0;
  for (const auto& row : squint::delay_scan(base, {0.0}, 0.0, patterns)) {
    if (row.pattern[0] != row.pattern[1]) {
      forbidden_max = std::max(forbidden_max, row.probability);
    }
  }

  const Scenario distinct = make_scenario(squint::beamsplitter_unitary(),
                                          {1.0, 1.0},
                                          squint_tests::identity_overlap(2));
  const squint::ProbabilityTable distinct_table = squint::distribution(distinct, 4);
  double far_err = 0.0;
  for (const auto& row : squint::delay_scan(base, {10.0}, 0.0, patterns)) {
    const double reference = distinct_table.probabilities.at(row.pattern);
    far_err = std::max(far_err, std::abs(row.probability - reference));
  }

  const auto on_carrier = squint::delay_scan(base, {1.0}, 0.0, patterns);
  const auto detuned =
      squint::delay_scan(base, {1.0}, M_PI / 4.0, patterns);
  double detuning_gap = 0.0;
  for (std::size_t i = 0; i < on_carrier.size(); ++i) {
    detuning_gap = std::max(
        detuning_gap, std::abs(on_carrier[i].probability - detuned[i].probability));
  }

  std::ostringstream detail;
  detail << "zero_delay_max=" << fmt(forbidden_max) << " tol=1e-10"
         << " far_delay_err=" << fmt(far_err) << " tol=1e-6"
         << " detuning_gap=" << fmt(detuning_gap) << " min=1e-6";
  return {forbidden_max <= 1e-10 && far_err <= 1e-6 && detuning_gap > 1e-6,
          detail.str()};
}

/// Criterion 6: the homogeneous-overlap decomposition reproduces the
/// direct probability at every mixing parameter, and the
/// interference-free factor vanishes exactly on odd totals.
CriterionResult homogeneous_decomposition_identity() {
  const double tol = 1e-9;
  double max_err = 0.0;
  bool odd_noise_seen = false;
  const std::vector<OutcomePattern> patterns = patterns_up_to(3, 4);

  for (double eps : {0.0, 0.3, 0.7, 1.0}) {
    const Scenario s = make_scenario(squint::tritter_unitary(), {0.7, 0.7, 0.0},
                                     squint::homogeneous_overlap(eps, 3));
    for (const OutcomePattern& pattern : patterns) {
      const squint::HomogeneousDecomposition d =
          squint::homogeneous_decomposition(s, eps, pattern);
      max_err = std::max(max_err, std::abs(d.total - d.direct));
      for (const auto& term : d.terms) {
        if (pattern_total(term.noise_pattern) % 2 != 0) odd_noise_seen = true;
      }
    }
  }

  bool odd_exactly_zero = true;
  for (const OutcomePattern& m : patterns_up_to(3, 5)) {
    if (pattern_total(m) % 2 == 0) continue;
    if (squint::classical_probability(m, 2, 3, 0.7) != 0.0) {
      odd_exactly_zero = false;
    }
  }

  std::ostringstream detail;
  detail << "max_err=" << fmt(max_err) << " tol=1e-9 odd_noise_terms="
         << (odd_noise_seen ? "present" : "none")
         << " odd_classical=" << (odd_exactly_zero ? "exact_zero" : "nonzero");
  return {max_err <= tol && !odd_noise_seen && odd_exactly_zero, detail.str()};
}

/// Criterion 7: the interference-free closed form matches an independent
/// series-coefficient construction of the same generating function, and
/// the self-validation report records the adopted per-pattern prefactor.
CriterionResult classical_closed_form() {
  const double tol = 1e-12;
  double max_err = 0.0;

  for (int modes = 1; modes <= 4; ++modes) {
    for (int squeezed = 0; squeezed <= std::min(4, modes); ++squeezed) {
      for (double r : {0.45, 0.8, 1.0}) {
        const std::vector<int> caps(modes, 6);
        const double t = std::tanh(r);

        squint::TruncatedSeries sum =
            squint::TruncatedSeries::constant(caps, 6, 0.0);
        for (int l = 0; l < modes; ++l) {
          sum += squint::TruncatedSeries::variable(caps, 6, l);
        }
        const squint::TruncatedSeries x =
            (sum * sum) * Complex(t * t / (static_cast<double>(modes) * modes), 0.0);

        squint::TruncatedSeries reference =
            squint::TruncatedSeries::constant(caps, 6, 1.0);
        squint::TruncatedSeries power =
            squint::TruncatedSeries::constant(caps, 6, 1.0);
        double coeff = 1.0;
        for (int j = 1; j <= 3; ++j) {
          power = power * x;
          coeff *= (squeezed / 2.0 + (j - 1)) / j;
          reference += power * Complex(coeff, 0.0);
        }

        for (const OutcomePattern& m : patterns_up_to(modes, 6)) {
          const Complex c = reference.coefficient(m);
          const double direct =
              squint::classical_probability(m, squeezed, modes, r);
          max_err = std::max(max_err, std::abs(c - Complex(direct, 0.0)));
        }
      }
    }
  }

  std::string note = "missing";
  bool reported = false;
  for (const squint::CheckResult& check : squint::run_validation_suite()) {
    if (check.name != "classical_closed_form") continue;
    const std::size_t at = check.detail.find("prefactor_resolution");
    if (check.passed && at != std::string::npos) {
      reported = true;
      note = check.detail.substr(at);
    }
  }

  std::ostringstream detail;
  detail << "max_err=" << fmt(max_err) << " tol=1e-12 report: " << note;
  return {max_err <= tol && reported, detail.str()};
}

/// Criterion 8: threshold-detector click patterns are complete and match
/// the photon-number distribution summed over each click support.
CriterionResult threshold_consistency() {
  double completeness_err = 0.0;
  double max_pnr_err = 0.0;
  const int truncation = 18;

  std::vector<Scenario> scenarios;
  scenarios.push_back(make_scenario(
      squint::beamsplitter_unitary(), {0.75, 0.6},
      squint::gaussian_overlap({squint::centered_equal_delays(2, 0.9), 1.0, 0.5}),
      {0.9, 0.8}));
  scenarios.push_back(make_scenario(squint::tritter_unitary(), {0.7, 0.5, 0.3},
                                    squint::homogeneous_overlap(0.25, 3),
                                    {1.0, 0.85, 0.7}));

  for (const Scenario& s : scenarios) {
    const int modes = s.modes();
    const squint::ProbabilityTable table =
        squint::distribution(s, truncation, truncation);

    double total = 0.0;
    for (int mask = 0; mask < (1 << modes); ++mask) {
      std::vector<int> clicked;
      for (int l = 0; l < modes; ++l) {
        if (mask & (1 << l)) clicked.push_back(l);
      }
      const double click = squint::click_pattern_probability(s, clicked);
      total += click;

      double pnr_sum = 0.0;
      for (const auto& [pattern, p] : table.probabilities) {
        bool matches = true;
        for (int l = 0; l < modes; ++l) {
          const bool wants = (mask & (1 << l)) != 0;
          if ((pattern[l] > 0) != wants) {
            matches = false;
            break;
          }
        }
        if (matches) pnr_sum += p;
      }
      max_pnr_err = std::max(max_pnr_err, std::abs(click - pnr_sum));
    }
    completeness_err = std::max(completeness_err, std::abs(total - 1.0));
  }

  std::ostringstream detail;
  detail << "completeness_err=" << fmt(completeness_err) << " tol=1e-9"
         << " pnr_err=" << fmt(max_pnr_err) << " tol=1e-4 truncation=18";
  return {completeness_err <= 1e-9 && max_pnr_err <= 1e-4, detail.str()};
}

/// Criterion 9: truncated distributions are monotone in the cutoff and,
/// for scenarios whose total-count tail fits inside the cutoff, sum to
/// one within 1e-3 from below and 1e-9 from above. Near maximal squeezing
/// the exact tail beyond total 14 exceeds 1e-3, so that scenario is held
/// to monotonicity and a documented looser floor.
CriterionResult truncated_normalization() {
  const int cutoff = 14;
  double min_regular_sum = 2.0;
  double max_sum = 0.0;
  bool monotone = true;

  std::vector<Scenario> regular;
  regular.push_back(make_scenario(CMatrix::Identity(1, 1), {0.85}, ones_overlap(1)));
  regular.push_back(make_scenario(
      squint::beamsplitter_unitary(), {0.75, 0.7},
      squint::gaussian_overlap({squint::centered_equal_delays(2, 0.7), 1.0, 0.0})));
  regular.push_back(make_scenario(squint::tritter_unitary(), {0.7, 0.6, 0.5},
                                  squint::homogeneous_overlap(0.3, 3)));
  Scenario extreme =
      make_scenario(squint::beamsplitter_unitary(), {1.0, 1.0}, ones_overlap(2));

  auto partial_sums = [&](const Scenario& s) {
    const squint::ProbabilityTable table = squint::distribution(s, cutoff);
    std::vector<double> sums(cutoff + 1, 0.0);
    for (const auto& [pattern, p] : table.probabilities) {
      sums[pattern_total(pattern)] += p;
    }
    for (int c = 1; c <= cutoff; ++c) sums[c] += sums[c - 1];
    return sums;
  };

  for (const Scenario& s : regular) {
    const std::vector<double> sums = partial_sums(s);
    for (int c = 1; c <= cutoff; ++c) {
      if (sums[c] < sums[c - 1] - 1e-15) monotone = false;
    }
    min_regular_sum = std::min(min_regular_sum, sums[cutoff]);
    max_sum = std::max(max_sum, sums[cutoff]);
  }

  const std::vector<double> extreme_sums = partial_sums(extreme);
  for (int c = 1; c <= cutoff; ++c) {
    if (extreme_sums[c] < extreme_sums[c - 1] - 1e-15) monotone = false;
  }
  max_sum = std::max(max_sum, extreme_sums[cutoff]);

  const bool regular_ok =
      min_regular_sum >= 1.0 - 1e-3 && max_sum <= 1.0 + 1e-9;
  const bool extreme_ok = extreme_sums[cutoff] >= 0.98;

  std::ostringstream detail;
  detail << "min_regular_sum=" << fmt(min_regular_sum)
         << " bracket=[1-1e-3,1+1e-9] max_squeeze_sum="
         << fmt(extreme_sums[cutoff]) << " floor=0.98 monotone="
         << (monotone ? "yes" : "no");
  return {regular_ok && extreme_ok && monotone, detail.str()};
}

/// Single-mode reference distribution for the averaged displaced state:
/// the average over displacement noise of variance eps tanh(r)^2 of a
/// displaced squeezed vacuum, in closed form.
double averaged_reference(double r, double eps, int n) {
  const double t = std::tanh(r);
  const double noise = eps * t * t;
  double n_factorial = 1.0;
  for (int i = 2; i <= n; ++i) n_factorial *= i;
  double sum = 0.0;
  for (int j = 0; 2 * j <= n; ++j) {
    double j_factorial = 1.0;
    for (int i = 2; i <= j; ++i) j_factorial *= i;
    double rest_factorial = 1.0;
    for (int i = 2; i <= n - 2 * j; ++i) rest_factorial *= i;
    sum += std::pow(t / 2.0, 2 * j) * std::pow(noise, n - 2 * j) /
           (j_factorial * j_factorial * rest_factorial);
  }
  return sech(r) * n_factorial * sum;
}

/// Criterion 10: the displaced-average Monte Carlo estimator reproduces a
/// weakly distinguishable coincidence probability within its statistical
/// and first-order bias budget, and reduces to the closed-form averaged
/// single-mode distribution.
CriterionResult displaced_average_mc() {
  const double eps = 0.05;
  const Scenario pair = make_scenario(squint::beamsplitter_unitary(), {0.8, 0.8},
                                      squint::homogeneous_overlap(eps, 2));
  const OutcomePattern coincidence{1, 1};
  const double exact = squint::probability(pair, coincidence);
  const squint::MonteCarloEstimate estimate =
      squint::displaced_average_probability(pair, eps, coincidence, 100000, 7);
  const double budget = 3.0 * estimate.standard_error + 2.0 * eps * exact;
  const double mc_err = std::abs(estimate.value - exact);

  const double r1 = 0.8;
  const double eps1 = 0.3;
  const Scenario single = make_scenario(CMatrix::Identity(1, 1), {r1},
                                        squint::homogeneous_overlap(eps1, 1));
  const squint::MonteCarloTable table =
      squint::displaced_average_distribution(single, eps1, 6, 200000, 11);
  double marginal_err = 0.0;
  for (int n = 0; n <= 6; ++n) {
    const double reference = averaged_reference(r1, eps1, n);
    const double value = table.estimates.at(OutcomePattern{n}).value;
    marginal_err = std::max(marginal_err, std::abs(value - reference));
  }

  std::ostringstream detail;
  detail << "mc_err=" << fmt(mc_err) << " budget=" << fmt(budget)
         << " (3se+2*eps*exact, se=" << fmt(estimate.standard_error) << ")"
         << " marginal_err=" << fmt(marginal_err) << " tol=1e-3";
  return {mc_err <= budget && marginal_err <= 1e-3, detail.str()};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<CriterionResult()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"vacuum-probability", 1.0, vacuum_probability},
      {"matching-sum-crosscheck", 30.0, matching_sum_crosscheck},
      {"fock-oracle-equivalence", 120.0, fock_oracle_equivalence},
      {"forbidden-events", 30.0, forbidden_events},
      {"delay-scan-limits", 60.0, delay_scan_limits},
      {"homogeneous-decomposition", 30.0, homogeneous_decomposition_identity},
      {"classical-closed-form", 10.0, classical_closed_form},
      {"threshold-consistency", 60.0, threshold_consistency},
      {"truncated-normalization", 60.0, truncated_normalization},
      {"displaced-average-mc", 120.0, displaced_average_mc},
  };

  std::printf("squint acceptance suite (%zu criteria)\n", criteria.size());
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = criterion.run();
    } catch (const std::exception& error) {
      result.passed = false;
      result.detail = std::string("exception: ") + error.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.budget_seconds) {
      result.passed = false;
      result.detail += " over_budget";
    }
    if (!result.passed) ++failures;
    std::printf("%s %2zu/%zu %-26s %s elapsed=%.2fs budget=%.0fs\n",
                result.passed ? "PASS" : "FAIL", i + 1, criteria.size(),
                criterion.name, result.detail.c_str(), elapsed,
                criterion.budget_seconds);
  }

  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
