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

#ifndef SQUINT_HAFNIAN_HPP
#define SQUINT_HAFNIAN_HPP

#include "squint/scenario.hpp"

namespace squint {

/// Largest matrix dimension accepted by the brute-force hafnian.
inline constexpr int kMaxHafnianDim = 12;

/// Complex symmetric matrix wrapper; construction rejects matrices with
/// |A - A^T| above 1e-12.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(CMatrix matrix);
  const CMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  CMatrix matrix_;
};

/// Brute-force hafnian: sum over perfect matchings of prod B_{i,j}.
/// Empty matrix -> 1, odd dimension -> 0; dimensions above kMaxHafnianDim
/// throw CapacityError.
Complex hafnian(const SymmetricMatrix& matrix);

/// Matrix with row and column i repeated repeats[i] times, preserving order.
CMatrix repeat_rows_cols(const CMatrix& matrix,
                         const std::vector<int>& repeats);

/// Outcome probability in the fully indistinguishable, unit-efficiency
/// limit, computed through the matched-pair combinatorial route:
/// c |haf(B_n)|^2 / prod n_l! with B = U^T diag(S) U and B_n the
/// pattern-repeated submatrix. Requires an all-ones overlap and unit
/// efficiencies (ValidationError otherwise); pattern totals above
/// kMaxHafnianDim throw CapacityError. Exists as an independent cross-check
/// of the series engine.
double indistinguishable_probability(const Scenario& scenario,
                                     const OutcomePattern& pattern);

}  // namespace squint

#endif
