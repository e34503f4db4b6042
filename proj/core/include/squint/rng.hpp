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

#ifndef SQUINT_RNG_HPP
#define SQUINT_RNG_HPP

#include <cmath>
#include <cstdint>

#include "squint/types.hpp"

namespace squint {

/// Deterministic counter-based pseudorandom generator (SplitMix64 core).
///
/// A generator is addressed by (seed, stream): stream s of seed q always
/// produces the same sequence, independent of any other stream, so Monte-Carlo
/// sample i can use stream i and be reproduced without replaying samples
/// 0..i-1 and regardless of evaluation order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(scramble(seed + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return scramble(state_);
  }

  /// Uniform in (0, 1]; never returns 0, so log() is always finite.
  double next_unit() {
    return 1.0 - static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate (Box-Muller).
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double radius = std::sqrt(-2.0 * std::log(next_unit()));
    double angle = 6.283185307179586476925286766559 * next_unit();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Circular complex normal with E[z] = 0 and E[|z|^2] = 1.
  Complex next_complex_normal() {
    double re = next_normal();
    double im = next_normal();
    return Complex(re * 0.7071067811865475244, im * 0.7071067811865475244);
  }

 private:
  static std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace squint

#endif
