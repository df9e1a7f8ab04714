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

#include "reef/rng.hpp"
#include "reef/simd/scalar_ref.hpp"

namespace reef::simd {

NoiseTable make_noise_table(uint64_t seed) {
  NoiseTable t;
  for (int i = 0; i < 256; ++i) t.perm[i] = i;
  Rng rng(seed);
  for (int i = 255; i > 0; --i) {
    int j = int(rng.next_below(uint64_t(i) + 1));
    std::swap(t.perm[i], t.perm[j]);
  }
  for (int i = 0; i < 256; ++i) t.perm[256 + i] = t.perm[i];
  return t;
}

namespace {

void fbm3_scalar(const double* x, const double* y, const double* z, size_t n,
                 const NoiseTable& table, int octaves, double gain,
                 double lacunarity, double* out) {
  for (size_t i = 0; i < n; ++i)
    out[i] = fbm3_ref(table, x[i], y[i], z[i], octaves, gain, lacunarity);
}

void tri_sqdist_scalar(const double p[3], const double* ax, const double* ay,
                       const double* az, const double* bx, const double* by,
                       const double* bz, const double* cx, const double* cy,
                       const double* cz, size_t n, double* out) {
  for (size_t i = 0; i < n; ++i)
    out[i] = tri_sqdist_ref(p[0], p[1], p[2], ax[i], ay[i], az[i], bx[i],
                            by[i], bz[i], cx[i], cy[i], cz[i]);
}

void ray_tri_scalar(const double origin[3], const double dir[3], double tmax,
                    const double* ax, const double* ay, const double* az,
                    const double* bx, const double* by, const double* bz,
                    const double* cx, const double* cy, const double* cz,
                    size_t n, double* out) {
  for (size_t i = 0; i < n; ++i)
    out[i] = ray_tri_ref(origin[0], origin[1], origin[2], dir[0], dir[1],
                         dir[2], tmax, ax[i], ay[i], az[i], bx[i], by[i],
                         bz[i], cx[i], cy[i], cz[i]);
}

void quantize_scalar(const double* v, size_t n, double origin, double inv_step,
                     uint32_t qmax, uint32_t* out) {
  double qm = double(qmax);
  for (size_t i = 0; i < n; ++i)
    out[i] = uint32_t(quantize_ref(v[i], origin, inv_step, qm));
}

void dequantize_scalar(const uint32_t* q, size_t n, double origin, double step,
                       double* out) {
  for (size_t i = 0; i < n; ++i) out[i] = origin + double(int32_t(q[i])) * step;
}

}  // namespace

const Kernels kScalarKernels = {fbm3_scalar, tri_sqdist_scalar, ray_tri_scalar,
                                quantize_scalar, dequantize_scalar};

}  // namespace reef::simd
