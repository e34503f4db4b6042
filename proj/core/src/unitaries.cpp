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

#include "squint/unitaries.hpp"

#include <cmath>

#include "squint/rng.hpp"
#include "squint/scenario.hpp"

namespace squint {

CMatrix beamsplitter_unitary() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix u(2, 2);
  u << Complex(s, 0), Complex(0, s),
       Complex(0, s), Complex(s, 0);
  return u;
}

CMatrix tritter_unitary() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  CMatrix u(3, 3);
  u << s, s, s,
       s, s * w, s * std::conj(w),
       s, s * std::conj(w), s * w;
  return u;
}

CMatrix fourier_unitary(int modes) {
  if (modes < 1 || modes > kMaxModes) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "fourier_unitary: mode count out of range");
  }
  const double s = 1.0 / std::sqrt(static_cast<double>(modes));
  CMatrix u(modes, modes);
  for (int k = 0; k < modes; ++k) {
    for (int l = 0; l < modes; ++l) {
      u(k, l) = s * std::polar(1.0, 2.0 * M_PI * k * l / modes);
    }
  }
  return u;
}

CMatrix haar_random_unitary(int modes, std::uint64_t seed) {
  if (modes < 1 || modes > kMaxModes) {
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "haar_random_unitary: mode count out of range");
  }
  CounterRng rng(seed, 0);
  CMatrix z(modes, modes);
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      z(i, j) = rng.next_complex_normal();
    }
  }
  // Modified Gram-Schmidt with one re-orthogonalization pass.
  for (int j = 0; j < modes; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        z.col(j) -= z.col(i).dot(z.col(j)) * z.col(i);
      }
    }
    z.col(j) /= z.col(j).norm();
  }
  return z;
}

}  // namespace squint
