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

#include <cmath>

#include <doctest.h>

#include "squint/scenario.hpp"
#include "squint/types.hpp"
#include "squint/unitaries.hpp"

using squint::CMatrix;
using squint::Complex;
using squint::ValidationError;

namespace {

double unitarity_defect(const CMatrix& u) {
  const CMatrix defect =
      u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("beamsplitter matches the balanced coupler") {
  const CMatrix u = squint::beamsplitter_unitary();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u(0, 0) - Complex(s, 0.0)) < 1e-15);
  CHECK(std::abs(u(0, 1) - Complex(0.0, s)) < 1e-15);
  CHECK(std::abs(u(1, 0) - Complex(0.0, s)) < 1e-15);
  CHECK(std::abs(u(1, 1) - Complex(s, 0.0)) < 1e-15);
  CHECK(unitarity_defect(u) < 1e-15);
}

TEST_CASE("tritter is a uniform-magnitude unitary") {
  const CMatrix u = squint::tritter_unitary();
  CHECK(u.rows() == 3);
  CHECK(unitarity_defect(u) < 1e-14);
  const double mag = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      CHECK(std::abs(std::abs(u(k, l)) - mag) < 1e-14);
    }
  }
}

TEST_CASE("fourier multiport is unitary with uniform magnitudes") {
  for (int modes = 2; modes <= 6; ++modes) {
    const CMatrix u = squint::fourier_unitary(modes);
    CHECK(unitarity_defect(u) < 1e-13);
    const double mag = 1.0 / std::sqrt(static_cast<double>(modes));
    for (int k = 0; k < modes; ++k) {
      for (int l = 0; l < modes; ++l) {
        CHECK(std::abs(std::abs(u(k, l)) - mag) < 1e-13);
      }
    }
  }
}

TEST_CASE("two-mode fourier is the real Hadamard coupler") {
  const CMatrix u = squint::fourier_unitary(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u(0, 0) - Complex(s, 0.0)) < 1e-14);
  CHECK(std::abs(u(0, 1) - Complex(s, 0.0)) < 1e-14);
  CHECK(std::abs(u(1, 0) - Complex(s, 0.0)) < 1e-14);
  CHECK(std::abs(u(1, 1) - Complex(-s, 0.0)) < 1e-14);
}

TEST_CASE("fourier multiport rejects out-of-range mode counts") {
  CHECK_THROWS_AS(squint::fourier_unitary(0), ValidationError);
  CHECK_THROWS_AS(squint::fourier_unitary(squint::kMaxModes + 1),
                  ValidationError);
}

TEST_CASE("haar draws are unitary and deterministic per seed") {
  for (int modes : {2, 3, 5, 8}) {
    const CMatrix u = squint::haar_random_unitary(modes, 77);
    CHECK(unitarity_defect(u) < 1e-12);
    const CMatrix again = squint::haar_random_unitary(modes, 77);
    CHECK((u - again).cwiseAbs().maxCoeff() == 0.0);
    const CMatrix other = squint::haar_random_unitary(modes, 78);
    CHECK((u - other).cwiseAbs().maxCoeff() > 1e-3);
  }
}
