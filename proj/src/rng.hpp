// Copyright 2026 The sht authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>

namespace sht {

/// SplitMix64. Fixed algorithm so that seeds replay identically across
/// platforms and releases; witness verification depends on this.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound). Rejection from the smallest power-of-two
  /// range >= bound, so every residue is equally likely.
  uint64_t uniform_below(uint64_t bound) {
    const uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
      const uint64_t x = next() & mask;
      if (x < bound) return x;
    }
  }

 private:
  uint64_t state_;
};

/// Independent per-trial seed: trials of one run must see unrelated streams,
/// and replaying trial t must not require drawing trials 0..t-1.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sht
