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

// AVX2 variants of the hot kernels, 4 doubles per pass with scalar-reference
// tails. Each function mirrors the operation order of scalar_ref.hpp exactly:
// no FMA, conditional selects expressed so blends reproduce the scalar
// ternaries (including NaN behavior of min/max). Equivalence is enforced by
// tests/test_simd.cpp.

#include <immintrin.h>

#include "reef/simd/scalar_ref.hpp"

namespace reef::simd {

namespace {

inline __m256d blend(__m256d no, __m256d yes, __m256d mask) {
  return _mm256_blendv_pd(no, yes, mask);
}

inline __m256d lerp4(__m256d t, __m256d a, __m256d b) {
  return _mm256_add_pd(a, _mm256_mul_pd(t, _mm256_sub_pd(b, a)));
}

inline __m256d fade4(__m256d t) {
  __m256d inner = _mm256_add_pd(
      _mm256_mul_pd(t, _mm256_sub_pd(_mm256_mul_pd(t, _mm256_set1_pd(6.0)),
                                     _mm256_set1_pd(15.0))),
      _mm256_set1_pd(10.0));
  __m256d t3 = _mm256_mul_pd(_mm256_mul_pd(t, t), t);
  return _mm256_mul_pd(t3, inner);
}

inline __m128i gather_perm(const int32_t* p, __m128i idx) {
  return _mm_i32gather_epi32(reinterpret_cast<const int*>(p), idx, 4);
}

// grad_ref for four lanes; h enters with the table value, masked to 4 bits.
inline __m256d grad4(__m128i h32, __m256d x, __m256d y, __m256d z) {
  h32 = _mm_and_si128(h32, _mm_set1_epi32(15));
  __m256i h = _mm256_cvtepi32_epi64(h32);
  __m256d lt8 = _mm256_castsi256_pd(_mm256_cmpgt_epi64(_mm256_set1_epi64x(8), h));
  __m256d lt4 = _mm256_castsi256_pd(_mm256_cmpgt_epi64(_mm256_set1_epi64x(4), h));
  __m256d eq1214 = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(h, _mm256_set1_epi64x(~2ll)),
                         _mm256_set1_epi64x(12)));
  __m256d u = blend(y, x, lt8);
  __m256d v = blend(blend(z, x, eq1214), y, lt4);
  const __m256i sign = _mm256_set1_epi64x(int64_t(0x8000000000000000ull));
  __m256i bit1 = _mm256_cmpeq_epi64(_mm256_and_si256(h, _mm256_set1_epi64x(1)),
                                    _mm256_set1_epi64x(1));
  __m256i bit2 = _mm256_cmpeq_epi64(_mm256_and_si256(h, _mm256_set1_epi64x(2)),
                                    _mm256_set1_epi64x(2));
  __m256d su = _mm256_xor_pd(u, _mm256_castsi256_pd(_mm256_and_si256(bit1, sign)));
  __m256d sv = _mm256_xor_pd(v, _mm256_castsi256_pd(_mm256_and_si256(bit2, sign)));
  return _mm256_add_pd(su, sv);
}

inline __m256d noise3_4(const NoiseTable& table, __m256d x, __m256d y,
                        __m256d z) {
  const int32_t* p = table.perm;
  const __m128i k255 = _mm_set1_epi32(255);
  const __m128i one = _mm_set1_epi32(1);
  const __m256d d1 = _mm256_set1_pd(1.0);

  __m256d fx = _mm256_floor_pd(x), fy = _mm256_floor_pd(y), fz = _mm256_floor_pd(z);
  __m128i xi = _mm_and_si128(_mm256_cvttpd_epi32(fx), k255);
  __m128i yi = _mm_and_si128(_mm256_cvttpd_epi32(fy), k255);
  __m128i zi = _mm_and_si128(_mm256_cvttpd_epi32(fz), k255);
  __m256d rx = _mm256_sub_pd(x, fx);
  __m256d ry = _mm256_sub_pd(y, fy);
  __m256d rz = _mm256_sub_pd(z, fz);
  __m256d u = fade4(rx), v = fade4(ry), w = fade4(rz);

  __m128i a = _mm_add_epi32(gather_perm(p, xi), yi);
  __m128i aa = _mm_add_epi32(gather_perm(p, a), zi);
  __m128i ab = _mm_add_epi32(gather_perm(p, _mm_add_epi32(a, one)), zi);
  __m128i b = _mm_add_epi32(gather_perm(p, _mm_add_epi32(xi, one)), yi);
  __m128i ba = _mm_add_epi32(gather_perm(p, b), zi);
  __m128i bb = _mm_add_epi32(gather_perm(p, _mm_add_epi32(b, one)), zi);

  __m256d x1 = _mm256_sub_pd(rx, d1);
  __m256d y1 = _mm256_sub_pd(ry, d1);
  __m256d z1 = _mm256_sub_pd(rz, d1);

  __m256d g000 = grad4(gather_perm(p, aa), rx, ry, rz);
  __m256d g100 = grad4(gather_perm(p, ba), x1, ry, rz);
  __m256d g010 = grad4(gather_perm(p, ab), rx, y1, rz);
  __m256d g110 = grad4(gather_perm(p, bb), x1, y1, rz);
  __m256d g001 = grad4(gather_perm(p, _mm_add_epi32(aa, one)), rx, ry, z1);
  __m256d g101 = grad4(gather_perm(p, _mm_add_epi32(ba, one)), x1, ry, z1);
  __m256d g011 = grad4(gather_perm(p, _mm_add_epi32(ab, one)), rx, y1, z1);
  __m256d g111 = grad4(gather_perm(p, _mm_add_epi32(bb, one)), x1, y1, z1);

  return lerp4(w,
               lerp4(v, lerp4(u, g000, g100), lerp4(u, g010, g110)),
               lerp4(v, lerp4(u, g001, g101), lerp4(u, g011, g111)));
}

void fbm3_avx2(const double* x, const double* y, const double* z, size_t n,
               const NoiseTable& table, int octaves, double gain,
               double lacunarity, double* out) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d px = _mm256_loadu_pd(x + i);
    __m256d py = _mm256_loadu_pd(y + i);
    __m256d pz = _mm256_loadu_pd(z + i);
    __m256d sum = _mm256_setzero_pd();
    double amp = 1.0, freq = 1.0;
    for (int k = 0; k < octaves; ++k) {
      __m256d f = _mm256_set1_pd(freq);
      __m256d noise = noise3_4(table, _mm256_mul_pd(px, f),
                               _mm256_mul_pd(py, f), _mm256_mul_pd(pz, f));
      sum = _mm256_add_pd(sum, _mm256_mul_pd(_mm256_set1_pd(amp), noise));
      amp = amp * gain;
      freq = freq * lacunarity;
    }
    _mm256_storeu_pd(out + i, sum);
  }
  for (; i < n; ++i)
    out[i] = fbm3_ref(table, x[i], y[i], z[i], octaves, gain, lacunarity);
}

struct Vec4d {
  __m256d x, y, z;
};

inline __m256d dot4(const Vec4d& a, const Vec4d& b) {
  return _mm256_add_pd(
      _mm256_add_pd(_mm256_mul_pd(a.x, b.x), _mm256_mul_pd(a.y, b.y)),
      _mm256_mul_pd(a.z, b.z));
}

// Matches the scalar dot expansion u1*v1 + u2*v2 + u3*v3 evaluated left to
// right: (u1*v1 + u2*v2) + u3*v3.
inline __m256d dot4(__m256d ux, __m256d uy, __m256d uz, __m256d vx, __m256d vy,
                    __m256d vz) {
  return _mm256_add_pd(
      _mm256_add_pd(_mm256_mul_pd(ux, vx), _mm256_mul_pd(uy, vy)),
      _mm256_mul_pd(uz, vz));
}

inline __m256d seg_sqdist4(__m256d px, __m256d py, __m256d pz, __m256d ax,
                           __m256d ay, __m256d az, __m256d bx, __m256d by,
                           __m256d bz) {
  __m256d dx = _mm256_sub_pd(bx, ax), dy = _mm256_sub_pd(by, ay),
          dz = _mm256_sub_pd(bz, az);
  __m256d num = dot4(_mm256_sub_pd(px, ax), _mm256_sub_pd(py, ay),
                     _mm256_sub_pd(pz, az), dx, dy, dz);
  __m256d den = dot4(dx, dy, dz, dx, dy, dz);
  __m256d t = _mm256_div_pd(num, den);
  t = _mm256_min_pd(t, _mm256_set1_pd(1.0));
  t = _mm256_max_pd(t, _mm256_setzero_pd());
  __m256d qx = _mm256_sub_pd(_mm256_add_pd(ax, _mm256_mul_pd(t, dx)), px);
  __m256d qy = _mm256_sub_pd(_mm256_add_pd(ay, _mm256_mul_pd(t, dy)), py);
  __m256d qz = _mm256_sub_pd(_mm256_add_pd(az, _mm256_mul_pd(t, dz)), pz);
  return dot4(qx, qy, qz, qx, qy, qz);
}

void tri_sqdist_avx2(const double p[3], const double* axp, const double* ayp,
                     const double* azp, const double* bxp, const double* byp,
                     const double* bzp, const double* cxp, const double* cyp,
                     const double* czp, size_t n, double* out) {
  const __m256d px = _mm256_set1_pd(p[0]);
  const __m256d py = _mm256_set1_pd(p[1]);
  const __m256d pz = _mm256_set1_pd(p[2]);
  const __m256d zero = _mm256_setzero_pd();

  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ax = _mm256_loadu_pd(axp + i), ay = _mm256_loadu_pd(ayp + i),
            az = _mm256_loadu_pd(azp + i);
    __m256d bx = _mm256_loadu_pd(bxp + i), by = _mm256_loadu_pd(byp + i),
            bz = _mm256_loadu_pd(bzp + i);
    __m256d cx = _mm256_loadu_pd(cxp + i), cy = _mm256_loadu_pd(cyp + i),
            cz = _mm256_loadu_pd(czp + i);

    __m256d abx = _mm256_sub_pd(bx, ax), aby = _mm256_sub_pd(by, ay),
            abz = _mm256_sub_pd(bz, az);
    __m256d acx = _mm256_sub_pd(cx, ax), acy = _mm256_sub_pd(cy, ay),
            acz = _mm256_sub_pd(cz, az);
    __m256d apx = _mm256_sub_pd(px, ax), apy = _mm256_sub_pd(py, ay),
            apz = _mm256_sub_pd(pz, az);
    __m256d d1 = dot4(abx, aby, abz, apx, apy, apz);
    __m256d d2 = dot4(acx, acy, acz, apx, apy, apz);
    __m256d bpx = _mm256_sub_pd(px, bx), bpy = _mm256_sub_pd(py, by),
            bpz = _mm256_sub_pd(pz, bz);
    __m256d d3 = dot4(abx, aby, abz, bpx, bpy, bpz);
    __m256d d4 = dot4(acx, acy, acz, bpx, bpy, bpz);
    __m256d cpx = _mm256_sub_pd(px, cx), cpy = _mm256_sub_pd(py, cy),
            cpz = _mm256_sub_pd(pz, cz);
    __m256d d5 = dot4(abx, aby, abz, cpx, cpy, cpz);
    __m256d d6 = dot4(acx, acy, acz, cpx, cpy, cpz);
    __m256d vc = _mm256_sub_pd(_mm256_mul_pd(d1, d4), _mm256_mul_pd(d3, d2));
    __m256d vb = _mm256_sub_pd(_mm256_mul_pd(d5, d2), _mm256_mul_pd(d1, d6));
    __m256d va = _mm256_sub_pd(_mm256_mul_pd(d3, d6), _mm256_mul_pd(d5, d4));

    auto le = [&](__m256d l, __m256d r) { return _mm256_cmp_pd(l, r, _CMP_LE_OQ); };
    auto ge = [&](__m256d l, __m256d r) { return _mm256_cmp_pd(l, r, _CMP_GE_OQ); };

    __m256d c1 = _mm256_and_pd(le(d1, zero), le(d2, zero));
    __m256d c2 = _mm256_and_pd(ge(d3, zero), le(d4, d3));
    __m256d c3 = _mm256_and_pd(ge(d6, zero), le(d5, d6));
    __m256d c4 = _mm256_and_pd(_mm256_and_pd(le(vc, zero), ge(d1, zero)), le(d3, zero));
    __m256d c5 = _mm256_and_pd(_mm256_and_pd(le(vb, zero), ge(d2, zero)), le(d6, zero));
    __m256d d43 = _mm256_sub_pd(d4, d3);
    __m256d d56 = _mm256_sub_pd(d5, d6);
    __m256d c6 = _mm256_and_pd(_mm256_and_pd(le(va, zero), ge(d43, zero)), ge(d56, zero));

    // interior candidate
    __m256d denom = _mm256_div_pd(
        _mm256_set1_pd(1.0), _mm256_add_pd(_mm256_add_pd(va, vb), vc));
    __m256d iv = _mm256_mul_pd(vb, denom);
    __m256d iw = _mm256_mul_pd(vc, denom);
    __m256d qx = _mm256_add_pd(_mm256_add_pd(ax, _mm256_mul_pd(abx, iv)),
                               _mm256_mul_pd(acx, iw));
    __m256d qy = _mm256_add_pd(_mm256_add_pd(ay, _mm256_mul_pd(aby, iv)),
                               _mm256_mul_pd(acy, iw));
    __m256d qz = _mm256_add_pd(_mm256_add_pd(az, _mm256_mul_pd(abz, iv)),
                               _mm256_mul_pd(acz, iw));

    // edge BC
    __m256d t6 = _mm256_div_pd(d43, _mm256_add_pd(d43, d56));
    qx = blend(qx, _mm256_add_pd(bx, _mm256_mul_pd(t6, _mm256_sub_pd(cx, bx))), c6);
    qy = blend(qy, _mm256_add_pd(by, _mm256_mul_pd(t6, _mm256_sub_pd(cy, by))), c6);
    qz = blend(qz, _mm256_add_pd(bz, _mm256_mul_pd(t6, _mm256_sub_pd(cz, bz))), c6);
    // edge AC
    __m256d t5 = _mm256_div_pd(d2, _mm256_sub_pd(d2, d6));
    qx = blend(qx, _mm256_add_pd(ax, _mm256_mul_pd(t5, acx)), c5);
    qy = blend(qy, _mm256_add_pd(ay, _mm256_mul_pd(t5, acy)), c5);
    qz = blend(qz, _mm256_add_pd(az, _mm256_mul_pd(t5, acz)), c5);
    // edge AB
    __m256d t4 = _mm256_div_pd(d1, _mm256_sub_pd(d1, d3));
    qx = blend(qx, _mm256_add_pd(ax, _mm256_mul_pd(t4, abx)), c4);
    qy = blend(qy, _mm256_add_pd(ay, _mm256_mul_pd(t4, aby)), c4);
    qz = blend(qz, _mm256_add_pd(az, _mm256_mul_pd(t4, abz)), c4);
    // vertices, highest priority last
    qx = blend(qx, cx, c3); qy = blend(qy, cy, c3); qz = blend(qz, cz, c3);
    qx = blend(qx, bx, c2); qy = blend(qy, by, c2); qz = blend(qz, bz, c2);
    qx = blend(qx, ax, c1); qy = blend(qy, ay, c1); qz = blend(qz, az, c1);

    __m256d ex = _mm256_sub_pd(px, qx), ey = _mm256_sub_pd(py, qy),
            ez = _mm256_sub_pd(pz, qz);
    __m256d sq = dot4(ex, ey, ez, ex, ey, ez);

    __m256d nan = _mm256_cmp_pd(sq, sq, _CMP_UNORD_Q);
    if (_mm256_movemask_pd(nan)) {
      __m256d s0 = seg_sqdist4(px, py, pz, ax, ay, az, bx, by, bz);
      __m256d s1 = seg_sqdist4(px, py, pz, ax, ay, az, cx, cy, cz);
      __m256d s2 = seg_sqdist4(px, py, pz, bx, by, bz, cx, cy, cz);
      __m256d fb = _mm256_min_pd(_mm256_min_pd(s0, s1), s2);
      sq = blend(sq, fb, nan);
    }
    _mm256_storeu_pd(out + i, sq);
  }
  for (; i < n; ++i)
    out[i] = tri_sqdist_ref(p[0], p[1], p[2], axp[i], ayp[i], azp[i], bxp[i],
                            byp[i], bzp[i], cxp[i], cyp[i], czp[i]);
}

void ray_tri_avx2(const double origin[3], const double dir[3], double tmax,
                  const double* axp, const double* ayp, const double* azp,
                  const double* bxp, const double* byp, const double* bzp,
                  const double* cxp, const double* cyp, const double* czp,
                  size_t n, double* out) {
  const __m256d ox = _mm256_set1_pd(origin[0]);
  const __m256d oy = _mm256_set1_pd(origin[1]);
  const __m256d oz = _mm256_set1_pd(origin[2]);
  const __m256d dx = _mm256_set1_pd(dir[0]);
  const __m256d dy = _mm256_set1_pd(dir[1]);
  const __m256d dz = _mm256_set1_pd(dir[2]);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vmax = _mm256_set1_pd(tmax);
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ax = _mm256_loadu_pd(axp + i), ay = _mm256_loadu_pd(ayp + i),
            az = _mm256_loadu_pd(azp + i);
    __m256d bx = _mm256_loadu_pd(bxp + i), by = _mm256_loadu_pd(byp + i),
            bz = _mm256_loadu_pd(bzp + i);
    __m256d cx = _mm256_loadu_pd(cxp + i), cy = _mm256_loadu_pd(cyp + i),
            cz = _mm256_loadu_pd(czp + i);

    __m256d e1x = _mm256_sub_pd(bx, ax), e1y = _mm256_sub_pd(by, ay),
            e1z = _mm256_sub_pd(bz, az);
    __m256d e2x = _mm256_sub_pd(cx, ax), e2y = _mm256_sub_pd(cy, ay),
            e2z = _mm256_sub_pd(cz, az);
    __m256d pvx = _mm256_sub_pd(_mm256_mul_pd(dy, e2z), _mm256_mul_pd(dz, e2y));
    __m256d pvy = _mm256_sub_pd(_mm256_mul_pd(dz, e2x), _mm256_mul_pd(dx, e2z));
    __m256d pvz = _mm256_sub_pd(_mm256_mul_pd(dx, e2y), _mm256_mul_pd(dy, e2x));
    __m256d det = dot4(e1x, e1y, e1z, pvx, pvy, pvz);
    __m256d inv = _mm256_div_pd(one, det);
    __m256d tvx = _mm256_sub_pd(ox, ax), tvy = _mm256_sub_pd(oy, ay),
            tvz = _mm256_sub_pd(oz, az);
    __m256d u = _mm256_mul_pd(dot4(tvx, tvy, tvz, pvx, pvy, pvz), inv);
    __m256d qvx = _mm256_sub_pd(_mm256_mul_pd(tvy, e1z), _mm256_mul_pd(tvz, e1y));
    __m256d qvy = _mm256_sub_pd(_mm256_mul_pd(tvz, e1x), _mm256_mul_pd(tvx, e1z));
    __m256d qvz = _mm256_sub_pd(_mm256_mul_pd(tvx, e1y), _mm256_mul_pd(tvy, e1x));
    __m256d v = _mm256_mul_pd(dot4(dx, dy, dz, qvx, qvy, qvz), inv);
    __m256d t = _mm256_mul_pd(dot4(e2x, e2y, e2z, qvx, qvy, qvz), inv);

    __m256d hit = _mm256_and_pd(
        _mm256_and_pd(_mm256_cmp_pd(u, zero, _CMP_GE_OQ),
                      _mm256_cmp_pd(v, zero, _CMP_GE_OQ)),
        _mm256_and_pd(_mm256_cmp_pd(_mm256_add_pd(u, v), one, _CMP_LE_OQ),
                      _mm256_and_pd(_mm256_cmp_pd(t, zero, _CMP_GE_OQ),
                                    _mm256_cmp_pd(t, vmax, _CMP_LE_OQ))));
    _mm256_storeu_pd(out + i, blend(inf, t, hit));
  }
  for (; i < n; ++i)
    out[i] = ray_tri_ref(origin[0], origin[1], origin[2], dir[0], dir[1],
                         dir[2], tmax, axp[i], ayp[i], azp[i], bxp[i], byp[i],
                         bzp[i], cxp[i], cyp[i], czp[i]);
}

void quantize_avx2(const double* v, size_t n, double origin, double inv_step,
                   uint32_t qmax, uint32_t* out) {
  const __m256d vorigin = _mm256_set1_pd(origin);
  const __m256d vinv = _mm256_set1_pd(inv_step);
  const __m256d vqmax = _mm256_set1_pd(double(qmax));
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(v + i), vorigin), vinv);
    r = _mm256_round_pd(r, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    r = _mm256_max_pd(r, zero);
    r = _mm256_min_pd(r, vqmax);
    __m128i q = _mm256_cvttpd_epi32(r);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), q);
  }
  double qm = double(qmax);
  for (; i < n; ++i) out[i] = uint32_t(quantize_ref(v[i], origin, inv_step, qm));
}

void dequantize_avx2(const uint32_t* q, size_t n, double origin, double step,
                     double* out) {
  const __m256d vorigin = _mm256_set1_pd(origin);
  const __m256d vstep = _mm256_set1_pd(step);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i qi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(q + i));
    __m256d qd = _mm256_cvtepi32_pd(qi);
    _mm256_storeu_pd(out + i, _mm256_add_pd(vorigin, _mm256_mul_pd(qd, vstep)));
  }
  for (; i < n; ++i) out[i] = origin + double(int32_t(q[i])) * step;
}

}  // namespace

const Kernels kAvx2Kernels = {fbm3_avx2, tri_sqdist_avx2, ray_tri_avx2,
                              quantize_avx2, dequantize_avx2};

}  // namespace reef::simd
