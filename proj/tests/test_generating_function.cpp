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
#include <vector>

#include <doctest.h>

#include "squint/generating_function.hpp"
#include "squint/scenario.hpp"
#include "squint/series.hpp"
#include "squint/unitaries.hpp"
#include "test_support.hpp"

using squint::CMatrix;
using squint::RVector;
using squint::Scenario;
using squint::TruncatedSeries;
using squint::ValidationError;
using squint_tests::make_scenario;
using squint_tests::ones_overlap;

TEST_CASE("single-mode expansion reproduces the pair ladder") {
  const CMatrix u = CMatrix::Identity(1, 1);
  const Scenario s = make_scenario(u, {1.0}, ones_overlap(1));
  const TruncatedSeries g = squint::expand_generating_function(s, {8});
  for (int n = 0; n <= 8; ++n) {
    const double expected = squint_tests::single_mode_reference(1.0, n);
    CHECK(std::abs(g.coefficient(std::vector<int>{n}) - expected) < 1e-14);
  }
}

TEST_CASE("constant term is the vacuum coefficient") {
  const Scenario s = make_scenario(squint::tritter_unitary(), {0.9, 0.4, 0.0},
                                   ones_overlap(3));
  const TruncatedSeries g = squint::expand_generating_function(s, {2, 2, 2});
  CHECK(std::abs(g.constant_term() - squint::vacuum_coefficient(s)) < 1e-15);
}

TEST_CASE("numeric evaluation hits both exact endpoints") {
  const Scenario s = make_scenario(squint::beamsplitter_unitary(), {1.0, 0.6},
                                   ones_overlap(2));
  // The evaluation is the silent-detector weight: perfect detectors see
  // vacuum with the vacuum coefficient, blind detectors always stay silent.
  CHECK(std::abs(squint::evaluate_generating_function(
                     s, RVector::Ones(2)) -
                 squint::vacuum_coefficient(s)) < 1e-12);
  CHECK(std::abs(squint::evaluate_generating_function(
                     s, RVector::Zero(2)) -
                 1.0) < 1e-12);
}

TEST_CASE("numeric evaluation allows probe excursions but not more") {
  const Scenario s = make_scenario(squint::beamsplitter_unitary(), {0.5, 0.5},
                                   ones_overlap(2));
  RVector eta(2);
  eta << 1.04, 0.0;
  CHECK(squint::evaluate_generating_function(s, eta) > 0.0);
  eta << 1.2, 0.0;
  CHECK_THROWS_AS(squint::evaluate_generating_function(s, eta),
                  ValidationError);
  eta << -0.2, 0.5;
  CHECK_THROWS_AS(squint::evaluate_generating_function(s, eta),
                  ValidationError);
}

TEST_CASE("finite differences of the numeric value match coefficients") {
  // For one mode the generating function is analytic in the loss variable;
  // the centered second difference at the origin recovers 2 P(2).
  const CMatrix u = CMatrix::Identity(1, 1);
  const Scenario s = make_scenario(u, {0.8}, ones_overlap(1));
  const double h = 1e-4;

  // eta = 1 - lambda, so lambda = +-h means eta = 1 -+ h.
  RVector eta(1);
  eta << 1.0 - h;
  const double plus = squint::evaluate_generating_function(s, eta);
  eta << 1.0 + h;
  const double minus = squint::evaluate_generating_function(s, eta);
  eta << 1.0;
  const double center = squint::evaluate_generating_function(s, eta);

  const double second = (plus - 2.0 * center + minus) / (h * h);
  const double p2 = squint_tests::single_mode_reference(0.8, 2);
  CHECK(std::abs(second / 2.0 - p2) < 1e-5);
}

TEST_CASE("shifted expansion at a zero base matches the plain expansion") {
  const Scenario s = make_scenario(squint::beamsplitter_unitary(), {0.7, 0.9},
                                   ones_overlap(2));
  const std::vector<int> caps{3, 3};
  const TruncatedSeries plain =
      squint::expand_generating_function(s, caps, 6);
  const TruncatedSeries shifted = squint::expand_generating_function_shifted(
      s, RVector::Zero(2), caps, 6);
  for (const auto& [index, coeff] : plain.terms()) {
    CHECK(std::abs(shifted.coefficient(index) - coeff) < 1e-14);
  }
}

TEST_CASE("shifted expansion recovers derivatives at an interior point") {
  // With a base point b, the shifted constant term must equal the numeric
  // value at eta = 1 - b.
  const Scenario s = make_scenario(squint::tritter_unitary(), {0.6, 0.3, 0.5},
                                   ones_overlap(3));
  RVector base(3);
  base << 0.2, 0.4, 0.1;
  const TruncatedSeries shifted = squint::expand_generating_function_shifted(
      s, base, {2, 2, 2}, 4);
  RVector eta = RVector::Ones(3) - base;
  CHECK(std::abs(shifted.constant_term() -
                 squint::evaluate_generating_function(s, eta)) < 1e-12);
}

TEST_CASE("phase wrap of the squeeze angle leaves outcomes unchanged") {
  Scenario a = make_scenario(squint::beamsplitter_unitary(), {0.8, 0.8},
                             ones_overlap(2));
  a.squeezing[0].theta = 0.7;
  a.squeezing[1].theta = -1.1;
  Scenario b = a;
  b.squeezing[0].theta += 2.0 * M_PI;
  b.squeezing[1].theta -= 2.0 * M_PI;

  const TruncatedSeries ga = squint::expand_generating_function(a, {3, 3});
  const TruncatedSeries gb = squint::expand_generating_function(b, {3, 3});
  for (const auto& [index, coeff] : ga.terms()) {
    CHECK(std::abs(gb.coefficient(index) - coeff) < 1e-12);
  }
}

TEST_CASE("a global phase on the interferometer is unobservable") {
  Scenario a = make_scenario(squint::haar_random_unitary(3, 4),
                             {0.6, 0.9, 0.2}, ones_overlap(3));
  Scenario b = a;
  b.unitary *= std::polar(1.0, 1.234);

  const TruncatedSeries ga =
      squint::expand_generating_function(a, {2, 2, 2}, 4);
  const TruncatedSeries gb =
      squint::expand_generating_function(b, {2, 2, 2}, 4);
  for (const auto& [index, coeff] : ga.terms()) {
    CHECK(std::abs(gb.coefficient(index) - coeff) < 1e-12);
  }
}

TEST_CASE("kernel series constant part equals the numeric kernel") {
  const Scenario s = make_scenario(squint::beamsplitter_unitary(), {0.9, 0.5},
                                   ones_overlap(2));
  RVector base(2);
  base << 0.3, 0.6;
  const squint::SeriesMatrix series =
      squint::squeezed_kernel_series(s, base, {2, 2}, 4);
  const CMatrix numeric = squint::squeezed_kernel_at(s, base);
  CHECK((series.constant_part() - numeric).cwiseAbs().maxCoeff() < 1e-14);

  const squint::SeriesMatrix doubled = squint::doubled_kernel_series(series);
  const CMatrix doubled_numeric = squint::doubled_kernel(numeric);
  CHECK((doubled.constant_part() - doubled_numeric).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("kernel series linear coefficients are the mode components") {
  // Entry-level check of linearity: the coefficient of delta_l in the
  // kernel series is the squeeze-scaled rank-one component of mode l.
  Scenario s = make_scenario(squint::tritter_unitary(), {0.7, 0.4, 0.9},
                             ones_overlap(3));
  s.squeezing[2].theta = 0.8;
  const squint::SeriesMatrix series =
      squint::squeezed_kernel_series(s, RVector::Zero(3), {1, 1, 1}, 3);
  const squint::CVector roots = squint::squeeze_amplitude_roots(s);
  for (int l = 0; l < 3; ++l) {
    const CMatrix component = roots.asDiagonal().toDenseMatrix() *
                              squint::kernel_mode_component(s, l) *
                              roots.conjugate().asDiagonal().toDenseMatrix();
    std::vector<int> ex(3, 0);
    ex[l] = 1;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(series.at(i, j).coefficient(ex) - component(i, j)) <
              1e-14);
      }
    }
  }
}
