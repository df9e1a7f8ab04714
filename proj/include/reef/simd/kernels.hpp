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

#include <cstddef>
#include <cstdint>

namespace reef::simd {

// Hot arithmetic inner loops live behind this table: a scalar reference
// implementation and an AVX2 variant selected at runtime. Variants are
// required to produce bit-identical outputs (the scalar code avoids FP
// contraction and the vector code mirrors its operation order), so callers
// never observe which backend ran.

enum class Backend { kScalar, kAvx2 };

// Doubled 256-entry Perlin permutation table (index range [0, 511]).
struct NoiseTable {
  int32_t perm[512];
};

// Fisher-Yates shuffle of [0, 255] driven by the xorshift64* stream for
// `seed`, duplicated into the upper half.
NoiseTable make_noise_table(uint64_t seed);

struct Kernels {
  // Fractal gradient noise, one value per input point (SoA coordinates).
  // out[i] = sum_k gain^k * noise3(p_i * lacunarity^k).
  void (*fbm3)(const double* x, const double* y, const double* z, size_t n,
               const NoiseTable& table, int octaves, double gain,
               double lacunarity, double* out);

  // Squared distance from point p (xyz) to each of n triangles (SoA corners).
  void (*tri_sqdist)(const double p[3], const double* ax, const double* ay,
                     const double* az, const double* bx, const double* by,
                     const double* bz, const double* cx, const double* cy,
                     const double* cz, size_t n, double* out);

  // Two-sided ray/triangle intersection. out[i] = hit parameter in
  // [0, tmax], or +inf on miss.
  void (*ray_tri)(const double origin[3], const double dir[3], double tmax,
                  const double* ax, const double* ay, const double* az,
                  const double* bx, const double* by, const double* bz,
                  const double* cx, const double* cy, const double* cz,
                  size_t n, double* out);

  // out[i] = clamp(nearbyint((v[i] - origin) * inv_step), 0, qmax).
  void (*quantize)(const double* v, size_t n, double origin, double inv_step,
                   uint32_t qmax, uint32_t* out);

  // out[i] = origin + q[i] * step.
  void (*dequantize)(const uint32_t* q, size_t n, double origin, double step,
                     double* out);
};

bool avx2_supported();

// Active backend: REEF_SIMD=scalar|avx2 when set, else the widest supported.
Backend active_backend();

// Override the auto-selected backend. Throws reef::Error if unsupported.
void set_backend(Backend backend);

const char* backend_name(Backend backend);

// Kernel table for the active backend.
const Kernels& kernels();

// Kernel table for a specific backend (null if unsupported on this CPU).
const Kernels* kernels_for(Backend backend);

}  // namespace reef::simd
