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

#include <cstring>
#include <vector>

#include "doctest.h"
#include "reef/rng.hpp"
#include "reef/simd/kernels.hpp"
#include "reef/simd/scalar_ref.hpp"

using namespace reef;
using namespace reef::simd;

namespace {

// Sizes straddle the vector width so tails are exercised.
constexpr size_t kSizes[] = {1, 3, 4, 7, 8, 64, 257};

std::vector<double> random_doubles(Rng& rng, size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.next_range(lo, hi);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_SUITE_BEGIN("simd");

TEST_CASE("noise table is a seeded permutation") {
  NoiseTable t = make_noise_table(42);
  std::vector<int> seen(256, 0);
  for (int i = 0; i < 256; ++i) {
    REQUIRE(t.perm[i] >= 0);
    REQUIRE(t.perm[i] < 256);
    seen[t.perm[i]]++;
    CHECK(t.perm[i] == t.perm[256 + i]);
  }
  for (int i = 0; i < 256; ++i) CHECK(seen[i] == 1);
  NoiseTable t2 = make_noise_table(42);
  CHECK(std::memcmp(&t, &t2, sizeof(t)) == 0);
  NoiseTable t3 = make_noise_table(43);
  CHECK(std::memcmp(&t, &t3, sizeof(t)) != 0);
}

TEST_CASE("backend dispatch honours overrides") {
  Backend prev = active_backend();
  set_backend(Backend::kScalar);
  CHECK(active_backend() == Backend::kScalar);
  CHECK(kernels_for(Backend::kScalar) != nullptr);
  if (avx2_supported()) {
    set_backend(Backend::kAvx2);
    CHECK(active_backend() == Backend::kAvx2);
  }
  set_backend(prev);
}

TEST_CASE("fbm3 kernels are bit-identical across backends") {
  if (!avx2_supported()) return;
  const Kernels& scalar = *kernels_for(Backend::kScalar);
  const Kernels& avx2 = *kernels_for(Backend::kAvx2);
  NoiseTable table = make_noise_table(7);
  Rng rng(1);
  for (size_t n : kSizes) {
    auto x = random_doubles(rng, n, -40.0, 40.0);
    auto y = random_doubles(rng, n, -40.0, 40.0);
    auto z = random_doubles(rng, n, -40.0, 40.0);
    std::vector<double> a(n), b(n);
    scalar.fbm3(x.data(), y.data(), z.data(), n, table, 4, 0.5, 2.0, a.data());
    avx2.fbm3(x.data(), y.data(), z.data(), n, table, 4, 0.5, 2.0, b.data());
    REQUIRE(bit_equal(a, b));
  }
}

TEST_CASE("tri_sqdist kernels are bit-identical across backends") {
  if (!avx2_supported()) return;
  const Kernels& scalar = *kernels_for(Backend::kScalar);
  const Kernels& avx2 = *kernels_for(Backend::kAvx2);
  Rng rng(2);
  for (size_t n : kSizes) {
    auto ax = random_doubles(rng, n, -2, 2), ay = random_doubles(rng, n, -2, 2),
         az = random_doubles(rng, n, -2, 2);
    auto bx = random_doubles(rng, n, -2, 2), by = random_doubles(rng, n, -2, 2),
         bz = random_doubles(rng, n, -2, 2);
    auto cx = random_doubles(rng, n, -2, 2), cy = random_doubles(rng, n, -2, 2),
         cz = random_doubles(rng, n, -2, 2);
    if (n >= 4) {
      // Degenerate triangles: collapsed to a point and collinear.
      bx[1] = ax[1]; by[1] = ay[1]; bz[1] = az[1];
      cx[1] = ax[1]; cy[1] = ay[1]; cz[1] = az[1];
      cx[2] = (ax[2] + bx[2]) / 2; cy[2] = (ay[2] + by[2]) / 2;
      cz[2] = (az[2] + bz[2]) / 2;
    }
    double p[3] = {rng.next_range(-2, 2), rng.next_range(-2, 2), rng.next_range(-2, 2)};
    std::vector<double> a(n), b(n);
    scalar.tri_sqdist(p, ax.data(), ay.data(), az.data(), bx.data(), by.data(),
                      bz.data(), cx.data(), cy.data(), cz.data(), n, a.data());
    avx2.tri_sqdist(p, ax.data(), ay.data(), az.data(), bx.data(), by.data(),
                    bz.data(), cx.data(), cy.data(), cz.data(), n, b.data());
    REQUIRE(bit_equal(a, b));
    for (size_t i = 0; i < n; ++i) REQUIRE(std::isfinite(a[i]));
  }
}

TEST_CASE("ray_tri kernels are bit-identical across backends") {
  if (!avx2_supported()) return;
  const Kernels& scalar = *kernels_for(Backend::kScalar);
  const Kernels& avx2 = *kernels_for(Backend::kAvx2);
  Rng rng(3);
  for (size_t n : kSizes) {
    auto ax = random_doubles(rng, n, -2, 2), ay = random_doubles(rng, n, -2, 2),
         az = random_doubles(rng, n, -2, 2);
    auto bx = random_doubles(rng, n, -2, 2), by = random_doubles(rng, n, -2, 2),
         bz = random_doubles(rng, n, -2, 2);
    auto cx = random_doubles(rng, n, -2, 2), cy = random_doubles(rng, n, -2, 2),
         cz = random_doubles(rng, n, -2, 2);
    double o[3] = {rng.next_range(-3, 3), rng.next_range(-3, 3), rng.next_range(-3, 3)};
    double d[3] = {rng.next_range(-1, 1), rng.next_range(-1, 1), rng.next_range(-1, 1)};
    std::vector<double> a(n), b(n);
    scalar.ray_tri(o, d, 10.0, ax.data(), ay.data(), az.data(), bx.data(),
                   by.data(), bz.data(), cx.data(), cy.data(), cz.data(), n,
                   a.data());
    avx2.ray_tri(o, d, 10.0, ax.data(), ay.data(), az.data(), bx.data(),
                 by.data(), bz.data(), cx.data(), cy.data(), cz.data(), n,
                 b.data());
    REQUIRE(bit_equal(a, b));
  }
}

TEST_CASE("quantize/dequantize kernels are bit-identical across backends") {
  if (!avx2_supported()) return;
  const Kernels& scalar = *kernels_for(Backend::kScalar);
  const Kernels& avx2 = *kernels_for(Backend::kAvx2);
  Rng rng(4);
  for (size_t n : kSizes) {
    auto v = random_doubles(rng, n, -1.5, 2.5);
    if (n >= 2) {
      v[0] = -10.0;  // clamps below
      v[1] = 10.0;   // clamps above
    }
    uint32_t qmax = (1u << 14);
    std::vector<uint32_t> qa(n), qb(n);
    scalar.quantize(v.data(), n, -1.0, qmax / 3.0, qmax, qa.data());
    avx2.quantize(v.data(), n, -1.0, qmax / 3.0, qmax, qb.data());
    REQUIRE(std::memcmp(qa.data(), qb.data(), n * sizeof(uint32_t)) == 0);
    std::vector<double> da(n), db(n);
    scalar.dequantize(qa.data(), n, -1.0, 3.0 / qmax, da.data());
    avx2.dequantize(qa.data(), n, -1.0, 3.0 / qmax, db.data());
    REQUIRE(bit_equal(da, db));
  }
}

TEST_CASE("quantize ties use round-to-even in both backends") {
  if (!avx2_supported()) return;
  const Kernels& scalar = *kernels_for(Backend::kScalar);
  const Kernels& avx2 = *kernels_for(Backend::kAvx2);
  std::vector<double> v = {0.5, 1.5, 2.5, 3.5, 4.5, -0.5};
  std::vector<uint32_t> qa(v.size()), qb(v.size());
  scalar.quantize(v.data(), v.size(), 0.0, 1.0, 100, qa.data());
  avx2.quantize(v.data(), v.size(), 0.0, 1.0, 100, qb.data());
  CHECK(qa[0] == 0);
  CHECK(qa[1] == 2);
  CHECK(qa[2] == 2);
  CHECK(qa[3] == 4);
  CHECK(qa[4] == 4);
  CHECK(qa[5] == 0);  // clamped
  CHECK(std::memcmp(qa.data(), qb.data(), v.size() * sizeof(uint32_t)) == 0);
}

TEST_SUITE_END();
