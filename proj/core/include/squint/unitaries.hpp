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

#ifndef SQUINT_UNITARIES_HPP
#define SQUINT_UNITARIES_HPP

#include <cstdint>

#include "squint/types.hpp"

namespace squint {

/// Balanced two-mode coupler: (1/sqrt(2)) [[1, i], [i, 1]].
CMatrix beamsplitter_unitary();

/// Balanced symmetric three-mode coupler:
/// (1/sqrt(3)) [[1, 1, 1], [1, w, conj(w)], [1, conj(w), w]], w = e^{i 2pi/3}.
CMatrix tritter_unitary();

/// Discrete-Fourier multiport: U_kl = e^{i 2pi k l / M} / sqrt(M). Every
/// entry has magnitude 1/sqrt(M), the uniform-multiport property the
/// classical closed form relies on.
CMatrix fourier_unitary(int modes);

/// Haar-distributed random unitary, deterministic for a fixed seed.
///
/// Draws an i.i.d. complex Gaussian matrix from CounterRng(seed, 0) and
/// orthonormalizes it by modified Gram-Schmidt with a re-orthogonalization
/// pass. The triangular factor's diagonal is real positive by construction,
/// which is exactly the phase normalization that makes the draw Haar.
CMatrix haar_random_unitary(int modes, std::uint64_t seed);

}  // namespace squint

#endif
