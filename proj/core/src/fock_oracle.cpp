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

#include "squint/fock_oracle.hpp"

#include <cmath>
#include <vector>

#include "squint/distinguishability.hpp"
#include "squint/rng.hpp"
#include "squint/series.hpp"

namespace squint {
namespace {

constexpr double kGramTol = 1e-10;
constexpr double kHomogeneousMatchTol = 1e-12;
constexpr double kNormSlack = 1e-9;
constexpr double kMonomialBudget = 5e6;
constexpr int kMaxOracleCutoff = 64;
constexpr int kThinningSlack = 8;
constexpr int kSampleBoxLimit = 1 << 18;

using SparsePoly = std::map<MultiIndex, Complex>;

struct KahanAccumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double value) {
    const double y = value - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double factorial(int n) {
  double out = 1.0;
  for (int j = 2; j <= n; ++j) {
    out *= static_cast<double>(j);
  }
  return out;
}

SparsePoly sparse_multiply(const SparsePoly& a, const SparsePoly& b,
                           int total_cap) {
  SparsePoly out;
  for (const auto& [ia, ca] : a) {
    const int slack = total_cap - ia.total();
    for (const auto& [ib, cb] : b) {
      if (ib.total() > slack) {
        continue;
      }
      out[ia.plus(ib)] += ca * cb;
    }
  }
  return out;
}

void collect_patterns(int modes, int remaining, OutcomePattern& current,
                      std::vector<OutcomePattern>& out) {
  const int slot = static_cast<int>(current.size());
  if (slot == modes) {
    out.push_back(current);
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    current.push_back(n);
    collect_patterns(modes, remaining - n, current, out);
    current.pop_back();
  }
}

std::vector<OutcomePattern> all_patterns(int modes, int max_total) {
  std::vector<OutcomePattern> out;
  OutcomePattern scratch;
  scratch.reserve(static_cast<std::size_t>(modes));
  collect_patterns(modes, max_total, scratch, out);
  return out;
}

std::vector<std::vector<double>> binomial_table(int limit) {
  std::vector<std::vector<double>> pascal(static_cast<std::size_t>(limit) + 1);
  for (int n = 0; n <= limit; ++n) {
    pascal[n].assign(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k < n; ++k) {
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
  }
  return pascal;
}

void check_homogeneous(const Scenario& scenario, double epsilon) {
  const CMatrix expected = homogeneous_overlap(epsilon, scenario.modes());
  const double gap = (scenario.overlap - expected).cwiseAbs().maxCoeff();
  if (gap > kHomogeneousMatchTol) {
    throw ValidationError(
        ValidationError::Kind::bad_argument,
        "scenario overlap is not homogeneous at the given degree");
  }
}

}  // namespace

InternalAmplitudes gram_amplitudes(const CMatrix& overlap) {
  validate_overlap_matrix(overlap);
  const int m = static_cast<int>(overlap.rows());
  CMatrix phi = CMatrix::Zero(m, m);
  RVector residual = overlap.diagonal().real();
  std::vector<bool> open(static_cast<std::size_t>(m), true);
  int rank = 0;
  for (int step = 0; step < m; ++step) {
    int pivot = -1;
    double best = kGramTol;
    for (int k = 0; k < m; ++k) {
      if (open[k] && residual[k] > best) {
        best = residual[k];
        pivot = k;
      }
    }
    if (pivot < 0) {
      break;
    }
    const double scale = std::sqrt(residual[pivot]);
    phi(pivot, rank) = Complex(scale, 0.0);
    for (int k = 0; k < m; ++k) {
      if (!open[k] || k == pivot) {
        continue;
      }
      Complex dot = overlap(k, pivot);
      for (int u = 0; u < rank; ++u) {
        dot -= phi(k, u) * std::conj(phi(pivot, u));
      }
      phi(k, rank) = dot / scale;
      residual[k] = std::max(0.0, residual[k] - std::norm(phi(k, rank)));
    }
    open[pivot] = false;
    residual[pivot] = 0.0;
    ++rank;
  }
  return InternalAmplitudes{phi.leftCols(rank)};
}

ProbabilityTable oracle_distribution_from_amplitudes(
    const Scenario& scenario, const InternalAmplitudes& amplitudes,
    int cutoff) {
  validate_scenario(scenario);
  const int modes = scenario.modes();
  const int internal = amplitudes.internal_dim();
  if (amplitudes.sources() != modes || internal < 1 || internal > modes) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "internal amplitudes must be modes x dim with "
                          "1 <= dim <= modes");
  }
  const double gram_gap =
      (amplitudes.phi * amplitudes.phi.adjoint() - scenario.overlap)
          .cwiseAbs()
          .maxCoeff();
  if (gram_gap > kGramTol) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "amplitudes do not reproduce the overlap matrix");
  }
  if (cutoff < 0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "cutoff must be non-negative");
  }
  if (cutoff > kMaxOracleCutoff) {
    throw CapacityError(CapacityError::Kind::cutoff_too_large,
                        "cutoff exceeds the oracle limit");
  }
  const int slots = modes * internal;
  if (slots > kMaxVariables) {
    throw CapacityError(CapacityError::Kind::capacity_exceeded,
                        "too many combined spatial-internal modes");
  }
  double budget = 1.0;
  for (int j = 1; j <= slots; ++j) {
    budget *= static_cast<double>(cutoff + j) / j;
  }
  if (budget > kMonomialBudget) {
    throw CapacityError(CapacityError::Kind::cutoff_too_large,
                        "cutoff and mode count exceed the state budget");
  }

  const CVector squeeze = squeeze_amplitudes(scenario);
  SparsePoly state{{MultiIndex::zeros(slots), Complex(1.0, 0.0)}};
  for (int k = 0; k < modes; ++k) {
    if (squeeze[k] == Complex(0.0, 0.0)) {
      continue;
    }
    SparsePoly linear;
    for (int l = 0; l < modes; ++l) {
      for (int s = 0; s < internal; ++s) {
        const Complex coeff = scenario.unitary(k, l) * amplitudes.phi(k, s);
        if (coeff != Complex(0.0, 0.0)) {
          linear[MultiIndex::unit(slots, l * internal + s)] = coeff;
        }
      }
    }
    const SparsePoly pair = sparse_multiply(linear, linear, cutoff);
    SparsePoly expansion{{MultiIndex::zeros(slots), Complex(1.0, 0.0)}};
    SparsePoly power = expansion;
    const Complex half_squeeze = squeeze[k] * 0.5;
    for (int j = 1; 2 * j <= cutoff; ++j) {
      power = sparse_multiply(power, pair, cutoff);
      if (power.empty()) {
        break;
      }
      const Complex step = half_squeeze / static_cast<double>(j);
      for (auto& [index, value] : power) {
        value *= step;
      }
      for (const auto& [index, value] : power) {
        expansion[index] += value;
      }
    }
    state = sparse_multiply(state, expansion, cutoff);
  }

  const double vacuum = vacuum_coefficient(scenario);
  std::map<OutcomePattern, double> ideal;
  KahanAccumulator norm;
  for (const auto& [occupation, coeff] : state) {
    double weight = vacuum * std::norm(coeff);
    for (int slot = 0; slot < slots; ++slot) {
      weight *= factorial(occupation[slot]);
    }
    OutcomePattern pattern(static_cast<std::size_t>(modes), 0);
    for (int l = 0; l < modes; ++l) {
      for (int s = 0; s < internal; ++s) {
        pattern[l] += occupation[l * internal + s];
      }
    }
    ideal[pattern] += weight;
    norm.add(weight);
  }
  if (norm.sum > 1.0 + kNormSlack) {
    throw NumericFault("oracle state norm exceeds one");
  }

  ProbabilityTable table;
  table.modes = modes;
  table.max_total = cutoff;
  for (const OutcomePattern& pattern : all_patterns(modes, cutoff)) {
    table.probabilities[pattern] = 0.0;
  }
  bool lossy = false;
  for (int l = 0; l < modes; ++l) {
    if (scenario.efficiencies[l] != 1.0) {
      lossy = true;
      break;
    }
  }
  if (!lossy) {
    for (const auto& [pattern, weight] : ideal) {
      table.probabilities[pattern] = weight;
    }
    return table;
  }

  const auto pascal = binomial_table(cutoff);
  for (const auto& [source, weight] : ideal) {
    OutcomePattern seen(static_cast<std::size_t>(modes), 0);
    while (true) {
      double factor = weight;
      for (int l = 0; l < modes; ++l) {
        const double eta = scenario.efficiencies[l];
        factor *= pascal[source[l]][seen[l]] * std::pow(eta, seen[l]) *
                  std::pow(1.0 - eta, source[l] - seen[l]);
      }
      table.probabilities[seen] += factor;
      int cursor = modes - 1;
      while (cursor >= 0 && seen[cursor] == source[cursor]) {
        seen[cursor] = 0;
        --cursor;
      }
      if (cursor < 0) {
        break;
      }
      ++seen[cursor];
    }
  }
  return table;
}

ProbabilityTable oracle_distribution(const Scenario& scenario, int cutoff) {
  validate_scenario(scenario);
  return oracle_distribution_from_amplitudes(
      scenario, gram_amplitudes(scenario.overlap), cutoff);
}

double oracle_truncation_tail(const Scenario& scenario, int cutoff) {
  validate_scenario(scenario);
  if (cutoff < 0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "cutoff must be non-negative");
  }
  const CVector squeeze = squeeze_amplitudes(scenario);
  std::vector<double> covered{1.0};
  covered.resize(static_cast<std::size_t>(cutoff) + 1, 0.0);
  for (int k = 0; k < scenario.modes(); ++k) {
    const double t = std::abs(squeeze[k]);
    std::vector<double> single(static_cast<std::size_t>(cutoff) + 1, 0.0);
    double central = std::sqrt(1.0 - t * t);
    single[0] = central;
    for (int j = 1; 2 * j <= cutoff; ++j) {
      central *= t * t * (2.0 * j - 1.0) / (2.0 * j);
      single[static_cast<std::size_t>(2 * j)] = central;
    }
    std::vector<double> next(static_cast<std::size_t>(cutoff) + 1, 0.0);
    for (int total = 0; total <= cutoff; ++total) {
      if (covered[total] == 0.0) {
        continue;
      }
      for (int add = 0; total + add <= cutoff; ++add) {
        next[static_cast<std::size_t>(total + add)] +=
            covered[static_cast<std::size_t>(total)] *
            single[static_cast<std::size_t>(add)];
      }
    }
    covered = std::move(next);
  }
  KahanAccumulator sum;
  for (double value : covered) {
    sum.add(value);
  }
  return std::max(0.0, 1.0 - sum.sum);
}

MonteCarloTable displaced_average_distribution(const Scenario& scenario,
                                               double epsilon, int max_total,
                                               int sample_count,
                                               std::uint64_t seed) {
  validate_scenario(scenario);
  check_homogeneous(scenario, epsilon);
  if (max_total < 0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "pattern total bound must be non-negative");
  }
  if (sample_count < 2) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "at least two samples are required");
  }
  const int modes = scenario.modes();
  bool lossy = false;
  for (int l = 0; l < modes; ++l) {
    if (scenario.efficiencies[l] != 1.0) {
      lossy = true;
      break;
    }
  }
  const int cap = max_total + (lossy ? kThinningSlack : 0);
  double box_size = 1.0;
  for (int l = 0; l < modes; ++l) {
    box_size *= static_cast<double>(cap) + 1.0;
  }
  if (box_size > static_cast<double>(kSampleBoxLimit)) {
    throw CapacityError(CapacityError::Kind::capacity_exceeded,
                        "sample expansion box is too large");
  }
  const int box = static_cast<int>(box_size);

  std::vector<std::vector<int>> digits(static_cast<std::size_t>(box));
  std::vector<int> totals(static_cast<std::size_t>(box), 0);
  for (int idx = 0; idx < box; ++idx) {
    std::vector<int> digit(static_cast<std::size_t>(modes), 0);
    int rest = idx;
    for (int l = 0; l < modes; ++l) {
      digit[l] = rest % (cap + 1);
      rest /= cap + 1;
    }
    int total = 0;
    for (int value : digit) {
      total += value;
    }
    digits[static_cast<std::size_t>(idx)] = std::move(digit);
    totals[static_cast<std::size_t>(idx)] = total;
  }
  std::vector<int> strides(static_cast<std::size_t>(modes), 1);
  for (int l = 1; l < modes; ++l) {
    strides[l] = strides[l - 1] * (cap + 1);
  }

  const CVector squeeze = squeeze_amplitudes(scenario);
  const CMatrix quadratic = scenario.unitary.transpose() *
                            squeeze.asDiagonal().toDenseMatrix() *
                            scenario.unitary;
  const double vacuum = vacuum_coefficient(scenario);
  RVector sigma(modes);
  for (int k = 0; k < modes; ++k) {
    sigma[k] = std::sqrt(epsilon) * std::abs(squeeze[k]);
  }

  struct QuadraticTerm {
    int offset = 0;
    int total = 0;
    std::vector<int> digit;
    Complex coeff;
  };
  std::vector<QuadraticTerm> fixed_terms;
  for (int l = 0; l < modes; ++l) {
    for (int j = l; j < modes; ++j) {
      const Complex coeff =
          (l == j) ? quadratic(l, l) * 0.5 : quadratic(l, j);
      if (coeff == Complex(0.0, 0.0)) {
        continue;
      }
      QuadraticTerm term;
      term.offset = strides[l] + strides[j];
      term.total = 2;
      term.digit.assign(static_cast<std::size_t>(modes), 0);
      term.digit[l] += 1;
      term.digit[j] += 1;
      term.coeff = coeff;
      fixed_terms.push_back(std::move(term));
    }
  }

  const std::vector<OutcomePattern> targets = all_patterns(modes, max_total);
  const auto pascal = binomial_table(cap);
  struct SourceWeight {
    int index = 0;
    double weight = 0.0;
  };
  std::vector<std::vector<SourceWeight>> pulls(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const OutcomePattern& target = targets[t];
    for (int idx = 0; idx < box; ++idx) {
      if (totals[idx] > cap) {
        continue;
      }
      const std::vector<int>& source = digits[static_cast<std::size_t>(idx)];
      double weight = vacuum;
      bool reachable = true;
      for (int l = 0; l < modes; ++l) {
        if (source[l] < target[l]) {
          reachable = false;
          break;
        }
        const double eta = scenario.efficiencies[l];
        weight *= factorial(source[l]) * pascal[source[l]][target[l]] *
                  std::pow(eta, target[l]) *
                  std::pow(1.0 - eta, source[l] - target[l]);
      }
      if (reachable && weight != 0.0) {
        pulls[t].push_back(SourceWeight{idx, weight});
      }
    }
  }

  std::vector<KahanAccumulator> value_sums(targets.size());
  std::vector<KahanAccumulator> square_sums(targets.size());
  std::vector<Complex> accumulated(static_cast<std::size_t>(box));
  std::vector<Complex> current(static_cast<std::size_t>(box));
  std::vector<Complex> next(static_cast<std::size_t>(box));

  for (int sample = 0; sample < sample_count; ++sample) {
    CounterRng rng(seed, static_cast<std::uint64_t>(sample));
    CVector displacement(modes);
    for (int k = 0; k < modes; ++k) {
      displacement[k] = sigma[k] * rng.next_complex_normal();
    }
    const CVector linear = scenario.unitary.transpose() * displacement;

    std::fill(accumulated.begin(), accumulated.end(), Complex(0.0, 0.0));
    std::fill(current.begin(), current.end(), Complex(0.0, 0.0));
    accumulated[0] = Complex(1.0, 0.0);
    current[0] = Complex(1.0, 0.0);
    for (int order = 1; order <= cap; ++order) {
      std::fill(next.begin(), next.end(), Complex(0.0, 0.0));
      for (int idx = 0; idx < box; ++idx) {
        const Complex value = current[static_cast<std::size_t>(idx)];
        if (value == Complex(0.0, 0.0)) {
          continue;
        }
        const std::vector<int>& digit = digits[static_cast<std::size_t>(idx)];
        const int total = totals[static_cast<std::size_t>(idx)];
        for (int l = 0; l < modes; ++l) {
          if (total + 1 <= cap && digit[l] + 1 <= cap &&
              linear[l] != Complex(0.0, 0.0)) {
            next[static_cast<std::size_t>(idx + strides[l])] +=
                value * linear[l];
          }
        }
        for (const QuadraticTerm& term : fixed_terms) {
          if (total + term.total > cap) {
            continue;
          }
          bool fits = true;
          for (int l = 0; l < modes; ++l) {
            if (digit[l] + term.digit[l] > cap) {
              fits = false;
              break;
            }
          }
          if (fits) {
            next[static_cast<std::size_t>(idx + term.offset)] +=
                value * term.coeff;
          }
        }
      }
      const double inv = 1.0 / static_cast<double>(order);
      for (int idx = 0; idx < box; ++idx) {
        current[static_cast<std::size_t>(idx)] =
            next[static_cast<std::size_t>(idx)] * inv;
        accumulated[static_cast<std::size_t>(idx)] +=
            current[static_cast<std::size_t>(idx)];
      }
    }

    for (std::size_t t = 0; t < targets.size(); ++t) {
      double value = 0.0;
      for (const SourceWeight& pull : pulls[t]) {
        value +=
            pull.weight * std::norm(accumulated[static_cast<std::size_t>(
                              pull.index)]);
      }
      value_sums[t].add(value);
      square_sums[t].add(value * value);
    }
  }

  MonteCarloTable table;
  table.modes = modes;
  table.max_total = max_total;
  table.samples = sample_count;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    MonteCarloEstimate estimate;
    estimate.samples = sample_count;
    estimate.value = value_sums[t].sum / sample_count;
    const double spread =
        square_sums[t].sum - sample_count * estimate.value * estimate.value;
    estimate.standard_error = std::sqrt(
        std::max(0.0, spread) /
        (static_cast<double>(sample_count) * (sample_count - 1)));
    table.estimates[targets[t]] = estimate;
  }
  return table;
}

MonteCarloEstimate displaced_average_probability(const Scenario& scenario,
                                                 double epsilon,
                                                 const OutcomePattern& pattern,
                                                 int sample_count,
                                                 std::uint64_t seed) {
  if (static_cast<int>(pattern.size()) != scenario.modes()) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "pattern length must match mode count");
  }
  for (int entry : pattern) {
    if (entry < 0) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "pattern entries must be non-negative");
    }
  }
  const MonteCarloTable table = displaced_average_distribution(
      scenario, epsilon, pattern_total(pattern), sample_count, seed);
  return table.estimates.at(pattern);
}

}  // namespace squint
