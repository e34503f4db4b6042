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

#ifndef SQUINT_SERIES_HPP
#define SQUINT_SERIES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "squint/types.hpp"

namespace squint {

/// Maximum number of series variables (one per output mode).
inline constexpr int kMaxVariables = 16;

/// Exponent vector of one monomial in up to kMaxVariables variables.
struct MultiIndex {
  std::array<std::uint8_t, kMaxVariables> deg{};
  std::uint8_t count = 0;

  static MultiIndex zeros(int variable_count);
  static MultiIndex unit(int variable_count, int variable);
  static MultiIndex from(const std::vector<int>& exponents);

  int total() const;
  int operator[](int variable) const { return deg[variable]; }
  MultiIndex plus(const MultiIndex& other) const;
  std::vector<int> to_vector() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.count == b.count && a.deg == b.deg;
  }
  /// Lexicographic; gives every series a canonical deterministic term order.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.count != b.count) return a.count < b.count;
    return a.deg < b.deg;
  }
};

/// Multivariate power series truncated by per-variable degree caps and a
/// total-degree cap (at most the sum of the per-variable caps). Coefficients
/// are stored sparsely in canonical monomial order; every operation keeps
/// exactly the monomials inside the truncation region, so arithmetic is exact
/// for the retained coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<int> caps);
  TruncatedSeries(std::vector<int> caps, int total_cap);

  static TruncatedSeries constant(const std::vector<int>& caps, int total_cap,
                                  Complex value);
  static TruncatedSeries variable(const std::vector<int>& caps, int total_cap,
                                  int variable);

  int variable_count() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  int total_cap() const { return total_cap_; }

  /// Coefficient of the given monomial (0 when absent).
  Complex coefficient(const MultiIndex& index) const;
  Complex coefficient(const std::vector<int>& exponents) const;
  Complex constant_term() const;

  /// Adds value to one coefficient. Monomials beyond the truncation region
  /// are dropped silently, mirroring the arithmetic truncation rule.
  void add_term(const MultiIndex& index, Complex value);

  const std::map<MultiIndex, Complex>& terms() const { return terms_; }

  bool same_shape(const TruncatedSeries& other) const {
    return caps_ == other.caps_ && total_cap_ == other.total_cap_;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(Complex scale);

  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    a += b;
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    a -= b;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, Complex scale) {
    a *= scale;
    return a;
  }
  friend TruncatedSeries operator*(Complex scale, TruncatedSeries a) {
    a *= scale;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

  /// Series with conjugated coefficients (the variables are real).
  TruncatedSeries conjugated() const;

  /// Total degree of the lowest-order stored term; total_cap() + 1 if empty.
  int min_term_degree() const;

  /// Removes stored terms that are exactly zero.
  void prune_zeros();

 private:
  bool admissible(const MultiIndex& index) const;
  void require_same_shape(const TruncatedSeries& other) const;

  std::vector<int> caps_;
  int total_cap_;
  std::map<MultiIndex, Complex> terms_;
};

/// exp of a series with zero constant term (throws
/// SeriesError::nonzero_constant_term otherwise).
TruncatedSeries series_exp(const TruncatedSeries& exponent);

/// Matrix with TruncatedSeries entries, all sharing one truncation shape.
class SeriesMatrix {
 public:
  SeriesMatrix(int rows, int cols, const std::vector<int>& caps,
               int total_cap);

  static SeriesMatrix constant(const CMatrix& values,
                               const std::vector<int>& caps, int total_cap);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int>& caps() const { return caps_; }
  int total_cap() const { return total_cap_; }

  TruncatedSeries& at(int row, int col);
  const TruncatedSeries& at(int row, int col) const;

  SeriesMatrix operator+(const SeriesMatrix& other) const;
  SeriesMatrix operator*(const SeriesMatrix& other) const;
  SeriesMatrix scaled(Complex scale) const;
  SeriesMatrix conjugated() const;

  CMatrix constant_part() const;
  /// Copy with the constant part subtracted from every entry.
  SeriesMatrix without_constant_part() const;

  TruncatedSeries trace() const;
  int min_term_degree() const;

 private:
  int rows_;
  int cols_;
  std::vector<int> caps_;
  int total_cap_;
  std::vector<TruncatedSeries> entries_;
};

/// Numeric-by-series and series-by-numeric matrix products.
SeriesMatrix left_multiply(const CMatrix& numeric, const SeriesMatrix& series);
SeriesMatrix right_multiply(const SeriesMatrix& series,
                            const CMatrix& numeric);

/// Series of log det(I - A) for a series matrix A.
///
/// Splits A = A0 + X around the expansion point: det(I - A) =
/// det(I - A0) det(I - (I - A0)^{-1} X), takes the principal log of the
/// constant determinant, and expands the remainder with the trace-log series
/// -sum_{k>=1} tr(Y^k)/k, truncated at k = total_cap / min degree of Y.
/// Throws SeriesError::singular_at_origin when I - A0 is singular.
TruncatedSeries log_det_one_minus(const SeriesMatrix& a);

}  // namespace squint

#endif
