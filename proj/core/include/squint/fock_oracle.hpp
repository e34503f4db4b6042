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

#ifndef SQUINT_FOCK_ORACLE_HPP
#define SQUINT_FOCK_ORACLE_HPP

#include <cstdint>
#include <map>

#include "squint/pnr.hpp"
#include "squint/scenario.hpp"

namespace squint {

/// Internal-state amplitudes of the sources in an orthonormal internal
/// basis: row k holds the coordinates of source k's internal state, so
/// phi phi^dag reproduces the overlap matrix.
struct InternalAmplitudes {
  CMatrix phi;

  int sources() const { return static_cast<int>(phi.rows()); }
  int internal_dim() const { return static_cast<int>(phi.cols()); }
};

/// Factorizes an overlap matrix into internal-state amplitudes through a
/// diagonally pivoted triangular factorization. Directions whose residual
/// falls below 1e-10 are dropped, so rank-deficient overlaps yield fewer
/// internal dimensions than sources.
InternalAmplitudes gram_amplitudes(const CMatrix& overlap);

/// Brute-force outcome distribution: expands every squeezed input in a Fock
/// series over explicit (spatial, internal) modes, interferes them, and sums
/// squared amplitudes over internal occupations. Exact for pattern totals up
/// to `cutoff` at unit efficiency; with losses the binomial thinning is
/// truncated at source totals `cutoff`, bounded by oracle_truncation_tail.
/// Independent of the series engine by construction.
ProbabilityTable oracle_distribution(const Scenario& scenario, int cutoff);

/// Same oracle with caller-chosen amplitudes; phi must reproduce the
/// scenario overlap within 1e-10. Results do not depend on the internal
/// basis choice.
ProbabilityTable oracle_distribution_from_amplitudes(
    const Scenario& scenario, const InternalAmplitudes& amplitudes,
    int cutoff);

/// Probability that the inputs carry more than `cutoff` photons in total:
/// the exact complement of the truncated oracle's coverage, from the
/// closed-form per-input pair-number distributions (the interferometer
/// cannot change the total).
double oracle_truncation_tail(const Scenario& scenario, int cutoff);

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  int samples = 0;
};

struct MonteCarloTable {
  int modes = 0;
  int max_total = 0;
  int samples = 0;
  std::map<OutcomePattern, MonteCarloEstimate> estimates;
};

/// Estimates outcome probabilities of a weakly distinguishable
/// (homogeneous-overlap) scenario by averaging displaced squeezed states:
/// the photons leaking into orthogonal internal modes act as Gaussian
/// displacement noise with per-source variance epsilon tanh^2 r_k on the
/// retained common mode. Samples are indexed deterministically by
/// (seed, sample index). One shared sample set feeds every pattern with
/// total <= max_total. With losses the thinning truncates source totals at
/// max_total + 8.
MonteCarloTable displaced_average_distribution(const Scenario& scenario,
                                               double epsilon, int max_total,
                                               int sample_count,
                                               std::uint64_t seed);

/// Single-pattern convenience wrapper around the table estimator.
MonteCarloEstimate displaced_average_probability(const Scenario& scenario,
                                                 double epsilon,
                                                 const OutcomePattern& pattern,
                                                 int sample_count,
                                                 std::uint64_t seed);

}  // namespace squint

#endif
