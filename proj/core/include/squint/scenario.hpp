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

#ifndef SQUINT_SCENARIO_HPP
#define SQUINT_SCENARIO_HPP

#include <vector>

#include "squint/types.hpp"

namespace squint {

/// One squeezed input: squeezing magnitude r >= 0 and phase theta. The
/// complex squeeze amplitude is S = tanh(r) e^{i theta}; r = 0 is vacuum.
struct SqueezeParams {
  double r = 0.0;
  double theta = 0.0;
};

/// Complete description of one experiment:
///  - unitary: M x M interferometer matrix (input modes -> output modes),
///  - squeezing: per-input squeeze parameters (size M, vacuum where r = 0),
///  - overlap: M x M Gram matrix of the inputs' internal states; Hermitian,
///    positive semidefinite, unit diagonal. All-ones = indistinguishable,
///    identity = fully distinguishable.
///  - efficiencies: per-output detector efficiency in [0, 1].
struct Scenario {
  CMatrix unitary;
  std::vector<SqueezeParams> squeezing;
  CMatrix overlap;
  RVector efficiencies;

  int modes() const { return static_cast<int>(unitary.rows()); }
};

/// Hard upper bound on the mode count.
inline constexpr int kMaxModes = 16;
/// Above this mode count computations get expensive; validation warns once.
inline constexpr int kSoftModeLimit = 10;

/// Checks all Scenario invariants; throws ValidationError on the first
/// violation. Tolerances: unitarity 1e-10 (max |U U^dag - I|), overlap
/// Hermiticity and unit diagonal 1e-12, overlap eigenvalues >= -1e-10,
/// |V_kj| <= 1 + 1e-12, efficiencies within [0, 1].
void validate_scenario(const Scenario& scenario);

/// Same checks for a standalone overlap matrix.
void validate_overlap_matrix(const CMatrix& overlap);

/// Complex squeeze amplitudes S_k = tanh(r_k) e^{i theta_k}.
CVector squeeze_amplitudes(const Scenario& scenario);

/// Principal roots of the squeeze amplitudes, sqrt(tanh r_k) e^{i theta_k/2}.
/// The branch is fixed by the stored phase, so results are reproducible for
/// phases outside (-pi, pi] as well.
CVector squeeze_amplitude_roots(const Scenario& scenario);

/// Normalization constant prod_k (1 - tanh^2 r_k)^{1/2} of the joint input
/// state; equals the all-vacuum outcome probability at unit efficiency.
double vacuum_coefficient(const Scenario& scenario);

/// Detection kernel (U diag(lambda) U^dag) entrywise-multiplied by the
/// overlap matrix, evaluated at the loss point lambda = 1 - efficiencies of
/// the scenario. Hermitian by construction.
CMatrix detection_kernel(const Scenario& scenario);

/// Detection kernel at an explicit loss point lambda.
CMatrix detection_kernel_at(const Scenario& scenario, const RVector& lambda);

/// Contribution of output mode l to the detection kernel: the rank-one
/// lambda_l sensitivity (U e_l e_l^dag U^dag) entrywise-multiplied by the
/// overlap. detection_kernel_at(s, lambda) = sum_l lambda_l * component(s, l).
CMatrix kernel_mode_component(const Scenario& scenario, int mode);

/// Squeezing-scaled kernel  diag(root) K diag(conj(root))  with root the
/// principal squeeze-amplitude roots; the matrix whose pairing with its
/// conjugate drives every determinant in the generating function.
CMatrix squeezed_kernel(const Scenario& scenario);

/// Squeezing-scaled kernel at an explicit loss point.
CMatrix squeezed_kernel_at(const Scenario& scenario, const RVector& lambda);

/// Doubled block form [[0, A], [conj(A), 0]] of a squeezed kernel A; the
/// 2M x 2M matrix underlying the block determinant route.
CMatrix doubled_kernel(const CMatrix& squeezed);

}  // namespace squint

#endif
