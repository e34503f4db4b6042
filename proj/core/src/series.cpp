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

#include "squint/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/LU>

namespace squint {

namespace {

void check_variable_count(int count) {
  if (count < 1 || count > kMaxVariables) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "series variable count out of range");
  }
}

}  // namespace

MultiIndex MultiIndex::zeros(int variable_count) {
  check_variable_count(variable_count);
  MultiIndex index;
  index.count = static_cast<std::uint8_t>(variable_count);
  return index;
}

MultiIndex MultiIndex::unit(int variable_count, int variable) {
  MultiIndex index = zeros(variable_count);
  if (variable < 0 || variable >= variable_count) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "monomial variable out of range");
  }
  index.deg[variable] = 1;
  return index;
}

MultiIndex MultiIndex::from(const std::vector<int>& exponents) {
  MultiIndex index = zeros(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "monomial exponent out of range");
    }
    index.deg[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  return index;
}

int MultiIndex::total() const {
  int sum = 0;
  for (int i = 0; i < count; ++i) sum += deg[i];
  return sum;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  MultiIndex out = *this;
  for (int i = 0; i < count; ++i) {
    out.deg[i] = static_cast<std::uint8_t>(deg[i] + other.deg[i]);
  }
  return out;
}

std::vector<int> MultiIndex::to_vector() const {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = deg[i];
  return out;
}

TruncatedSeries::TruncatedSeries(std::vector<int> caps)
    : TruncatedSeries(caps, std::accumulate(caps.begin(), caps.end(), 0)) {}

TruncatedSeries::TruncatedSeries(std::vector<int> caps, int total_cap)
    : caps_(std::move(caps)) {
  check_variable_count(static_cast<int>(caps_.size()));
  int sum = 0;
  for (int cap : caps_) {
    if (cap < 0 || cap > 255) {
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "series cap out of range");
    }
    sum += cap;
  }
  if (total_cap < 0) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "series total cap must be non-negative");
  }
  total_cap_ = std::min(total_cap, sum);
}

TruncatedSeries TruncatedSeries::constant(const std::vector<int>& caps,
                                          int total_cap, Complex value) {
  TruncatedSeries s(caps, total_cap);
  s.add_term(MultiIndex::zeros(s.variable_count()), value);
  return s;
}

TruncatedSeries TruncatedSeries::variable(const std::vector<int>& caps,
                                          int total_cap, int variable) {
  TruncatedSeries s(caps, total_cap);
  s.add_term(MultiIndex::unit(s.variable_count(), variable), Complex(1, 0));
  return s;
}

bool TruncatedSeries::admissible(const MultiIndex& index) const {
  if (index.count != static_cast<std::uint8_t>(caps_.size())) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "monomial variable count disagrees with the series");
  }
  int total = 0;
  for (int i = 0; i < index.count; ++i) {
    if (index.deg[i] > caps_[i]) return false;
    total += index.deg[i];
  }
  return total <= total_cap_;
}

Complex TruncatedSeries::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Complex(0, 0) : it->second;
}

Complex TruncatedSeries::coefficient(const std::vector<int>& exponents) const {
  return coefficient(MultiIndex::from(exponents));
}

Complex TruncatedSeries::constant_term() const {
  return coefficient(MultiIndex::zeros(variable_count()));
}

void TruncatedSeries::add_term(const MultiIndex& index, Complex value) {
  if (!admissible(index)) return;
  terms_[index] += value;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& other) const {
  if (!same_shape(other)) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "series truncation shapes disagree");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_shape(other);
  for (const auto& [index, value] : other.terms_) {
    terms_[index] += value;
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_shape(other);
  for (const auto& [index, value] : other.terms_) {
    terms_[index] -= value;
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scale) {
  for (auto& [index, value] : terms_) {
    value *= scale;
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_shape(b);
  TruncatedSeries out(a.caps_, a.total_cap_);
  for (const auto& [ia, ca] : a.terms_) {
    const int ta = ia.total();
    for (const auto& [ib, cb] : b.terms_) {
      if (ta + ib.total() > out.total_cap_) continue;
      out.add_term(ia.plus(ib), ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::conjugated() const {
  TruncatedSeries out(caps_, total_cap_);
  for (const auto& [index, value] : terms_) {
    out.terms_[index] = std::conj(value);
  }
  return out;
}

int TruncatedSeries::min_term_degree() const {
  int best = total_cap_ + 1;
  for (const auto& [index, value] : terms_) {
    if (value != Complex(0, 0)) best = std::min(best, index.total());
  }
  return best;
}

void TruncatedSeries::prune_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == Complex(0, 0)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

TruncatedSeries series_exp(const TruncatedSeries& exponent) {
  if (exponent.constant_term() != Complex(0, 0)) {
    throw SeriesError(SeriesError::Kind::nonzero_constant_term,
                      "series_exp needs a zero constant term");
  }
  const std::vector<int>& caps = exponent.caps();
  const int total_cap = exponent.total_cap();
  TruncatedSeries result =
      TruncatedSeries::constant(caps, total_cap, Complex(1, 0));
  int min_degree = std::max(1, exponent.min_term_degree());
  int order = total_cap / min_degree;
  TruncatedSeries power = result;
  for (int k = 1; k <= order; ++k) {
    power = power * exponent;
    power *= Complex(1.0 / k, 0);
    result += power;
  }
  return result;
}

SeriesMatrix::SeriesMatrix(int rows, int cols, const std::vector<int>& caps,
                           int total_cap)
    : rows_(rows), cols_(cols), caps_(caps) {
  if (rows < 1 || cols < 1) {
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "series matrix must be non-empty");
  }
  TruncatedSeries zero(caps, total_cap);
  total_cap_ = zero.total_cap();
  entries_.assign(static_cast<std::size_t>(rows) * cols, zero);
}

SeriesMatrix SeriesMatrix::constant(const CMatrix& values,
                                    const std::vector<int>& caps,
                                    int total_cap) {
  SeriesMatrix out(static_cast<int>(values.rows()),
                   static_cast<int>(values.cols()), caps, total_cap);
  for (int i = 0; i < out.rows_; ++i) {
    for (int j = 0; j < out.cols_; ++j) {
      out.at(i, j).add_term(MultiIndex::zeros(out.at(i, j).variable_count()),
                            values(i, j));
    }
  }
  return out;
}

TruncatedSeries& SeriesMatrix::at(int row, int col) {
  return entries_[static_cast<std::size_t>(row) * cols_ + col];
}

const TruncatedSeries& SeriesMatrix::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row) * cols_ + col];
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "series matrix shapes disagree");
  }
  SeriesMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] += other.entries_[i];
  }
  return out;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& other) const {
  if (cols_ != other.rows_) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "series matrix product dimensions disagree");
  }
  SeriesMatrix out(rows_, other.cols_, caps_, total_cap_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      TruncatedSeries& target = out.at(i, j);
      for (int k = 0; k < cols_; ++k) {
        target += at(i, k) * other.at(k, j);
      }
    }
  }
  return out;
}

SeriesMatrix SeriesMatrix::scaled(Complex scale) const {
  SeriesMatrix out = *this;
  for (TruncatedSeries& entry : out.entries_) {
    entry *= scale;
  }
  return out;
}

SeriesMatrix SeriesMatrix::conjugated() const {
  SeriesMatrix out = *this;
  for (TruncatedSeries& entry : out.entries_) {
    entry = entry.conjugated();
  }
  return out;
}

CMatrix SeriesMatrix::constant_part() const {
  CMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out(i, j) = at(i, j).constant_term();
    }
  }
  return out;
}

SeriesMatrix SeriesMatrix::without_constant_part() const {
  SeriesMatrix out = *this;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      TruncatedSeries& entry = out.at(i, j);
      entry.add_term(MultiIndex::zeros(entry.variable_count()),
                     -entry.constant_term());
      entry.prune_zeros();
    }
  }
  return out;
}

TruncatedSeries SeriesMatrix::trace() const {
  if (rows_ != cols_) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "trace needs a square series matrix");
  }
  TruncatedSeries out(caps_, total_cap_);
  for (int i = 0; i < rows_; ++i) {
    out += at(i, i);
  }
  return out;
}

int SeriesMatrix::min_term_degree() const {
  int best = total_cap_ + 1;
  for (const TruncatedSeries& entry : entries_) {
    best = std::min(best, entry.min_term_degree());
  }
  return best;
}

SeriesMatrix left_multiply(const CMatrix& numeric,
                           const SeriesMatrix& series) {
  if (numeric.cols() != series.rows()) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "matrix product dimensions disagree");
  }
  SeriesMatrix out(static_cast<int>(numeric.rows()), series.cols(),
                   series.caps(), series.total_cap());
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      TruncatedSeries& target = out.at(i, j);
      for (int k = 0; k < series.rows(); ++k) {
        if (numeric(i, k) == Complex(0, 0)) continue;
        target += series.at(k, j) * numeric(i, k);
      }
    }
  }
  return out;
}

SeriesMatrix right_multiply(const SeriesMatrix& series,
                            const CMatrix& numeric) {
  if (series.cols() != numeric.rows()) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "matrix product dimensions disagree");
  }
  SeriesMatrix out(series.rows(), static_cast<int>(numeric.cols()),
                   series.caps(), series.total_cap());
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      TruncatedSeries& target = out.at(i, j);
      for (int k = 0; k < series.cols(); ++k) {
        if (numeric(k, j) == Complex(0, 0)) continue;
        target += series.at(i, k) * numeric(k, j);
      }
    }
  }
  return out;
}

TruncatedSeries log_det_one_minus(const SeriesMatrix& a) {
  if (a.rows() != a.cols()) {
    throw SeriesError(SeriesError::Kind::cap_mismatch,
                      "log det needs a square series matrix");
  }
  const int dim = a.rows();
  CMatrix a0 = a.constant_part();
  CMatrix base = CMatrix::Identity(dim, dim) - a0;
  Eigen::FullPivLU<CMatrix> lu(base);
  if (!lu.isInvertible()) {
    throw SeriesError(SeriesError::Kind::singular_at_origin,
                      "I - A is singular at the expansion point");
  }
  TruncatedSeries result = TruncatedSeries::constant(
      a.caps(), a.total_cap(), std::log(lu.determinant()));
  SeriesMatrix shifted = a.without_constant_part();
  SeriesMatrix y = left_multiply(lu.inverse(), shifted);
  int min_degree = std::max(1, y.min_term_degree());
  int order = a.total_cap() / min_degree;
  if (order >= 1) {
    SeriesMatrix power = y;
    result -= power.trace();
    for (int k = 2; k <= order; ++k) {
      power = power * y;
      result -= power.trace() * Complex(1.0 / k, 0);
    }
  }
  return result;
}

}  // namespace squint
