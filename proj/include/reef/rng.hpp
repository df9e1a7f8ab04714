// Copyright 2026 The Reef Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace reef {

// xorshift64* stream. Every seeded computation in this library (noise tables,
// surface sampling, stage-seed derivation) draws from this one generator so
// outputs are reproducible bit-for-bit across runs and thread counts.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : kPhi) {}

  uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Uniform integer in [0, n). Modulo bias is irrelevant at the n used here.
  uint64_t next_below(uint64_t n) { return next() % n; }

  static constexpr uint64_t kPhi = 0x9E3779B97F4A7C15ull;

 private:
  uint64_t state_;
};

// Derives an independent stream seed from (seed, index): perturb the state by
// the golden-ratio multiple of the index, then advance twice. Used for
// pipeline stage seeds and per-face sampling streams.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  Rng rng(seed ^ ((index + 1) * Rng::kPhi));
  rng.next();
  return rng.next();
}

}  // namespace reef
