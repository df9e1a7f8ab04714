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

#include <cmath>
#include <limits>

#include "reef/simd/kernels.hpp"

namespace reef::simd {

// Single-element scalar reference kernels. These define the semantics the
// vector variants must reproduce bit-for-bit, which constrains the style:
// conditional-select idioms mirror x86 min/max NaN behavior, and expression
// shapes match the vector operation order exactly. Do not "simplify" the
// arithmetic here without updating kernels_avx2.cpp in lockstep.

inline double fade_ref(double t) {
  return t * t * t * (t * (t * 6.0 - 15.0) + 10.0);
}

inline double lerp_ref(double t, double a, double b) { return a + t * (b - a); }

inline double grad_ref(int h, double x, double y, double z) {
  h &= 15;
  double u = h < 8 ? x : y;
  double v = h < 4 ? y : ((h & ~2) == 12 ? x : z);
  return (h & 1 ? -u : u) + (h & 2 ? -v : v);
}

// Classic 3D gradient noise over the permutation table, range within (-1, 1).
inline double noise3_ref(const NoiseTable& t, double x, double y, double z) {
  double fx = std::floor(x), fy = std::floor(y), fz = std::floor(z);
  int xi = int(fx) & 255, yi = int(fy) & 255, zi = int(fz) & 255;
  x -= fx;
  y -= fy;
  z -= fz;
  double u = fade_ref(x), v = fade_ref(y), w = fade_ref(z);
  const int32_t* p = t.perm;
  int a = p[xi] + yi, aa = p[a] + zi, ab = p[a + 1] + zi;
  int b = p[xi + 1] + yi, ba = p[b] + zi, bb = p[b + 1] + zi;
  return lerp_ref(
      w,
      lerp_ref(v,
               lerp_ref(u, grad_ref(p[aa], x, y, z), grad_ref(p[ba], x - 1.0, y, z)),
               lerp_ref(u, grad_ref(p[ab], x, y - 1.0, z),
                        grad_ref(p[bb], x - 1.0, y - 1.0, z))),
      lerp_ref(v,
               lerp_ref(u, grad_ref(p[aa + 1], x, y, z - 1.0),
                        grad_ref(p[ba + 1], x - 1.0, y, z - 1.0)),
               lerp_ref(u, grad_ref(p[ab + 1], x, y - 1.0, z - 1.0),
                        grad_ref(p[bb + 1], x - 1.0, y - 1.0, z - 1.0))));
}

inline double fbm3_ref(const NoiseTable& t, double x, double y, double z,
                       int octaves, double gain, double lacunarity) {
  double sum = 0.0, amp = 1.0, freq = 1.0;
  for (int k = 0; k < octaves; ++k) {
    sum = sum + amp * noise3_ref(t, x * freq, y * freq, z * freq);
    amp = amp * gain;
    freq = freq * lacunarity;
  }
  return sum;
}

// Squared distance from p to segment ab. Collapsed segments (and the NaN the
// division then produces) clamp to t = 1, matching minpd/maxpd semantics.
inline double seg_sqdist_ref(double px, double py, double pz, double ax,
                             double ay, double az, double bx, double by,
                             double bz) {
  double dx = bx - ax, dy = by - ay, dz = bz - az;
  double t = ((px - ax) * dx + (py - ay) * dy + (pz - az) * dz) /
             (dx * dx + dy * dy + dz * dz);
  t = t < 1.0 ? t : 1.0;
  t = t > 0.0 ? t : 0.0;
  double qx = ax + t * dx - px, qy = ay + t * dy - py, qz = az + t * dz - pz;
  return qx * qx + qy * qy + qz * qz;
}

// Squared distance from point p to triangle abc: Voronoi-region walk over the
// seven regions, first matching region wins.
inline double tri_sqdist_ref(double px, double py, double pz, double ax,
                             double ay, double az, double bx, double by,
                             double bz, double cx, double cy, double cz) {
  double abx = bx - ax, aby = by - ay, abz = bz - az;
  double acx = cx - ax, acy = cy - ay, acz = cz - az;
  double apx = px - ax, apy = py - ay, apz = pz - az;
  double d1 = abx * apx + aby * apy + abz * apz;
  double d2 = acx * apx + acy * apy + acz * apz;
  double bpx = px - bx, bpy = py - by, bpz = pz - bz;
  double d3 = abx * bpx + aby * bpy + abz * bpz;
  double d4 = acx * bpx + acy * bpy + acz * bpz;
  double cpx = px - cx, cpy = py - cy, cpz = pz - cz;
  double d5 = abx * cpx + aby * cpy + abz * cpz;
  double d6 = acx * cpx + acy * cpy + acz * cpz;
  double vc = d1 * d4 - d3 * d2;
  double vb = d5 * d2 - d1 * d6;
  double va = d3 * d6 - d5 * d4;

  double qx, qy, qz;
  if (d1 <= 0.0 && d2 <= 0.0) {  // vertex A
    qx = ax; qy = ay; qz = az;
  } else if (d3 >= 0.0 && d4 <= d3) {  // vertex B
    qx = bx; qy = by; qz = bz;
  } else if (d6 >= 0.0 && d5 <= d6) {  // vertex C
    qx = cx; qy = cy; qz = cz;
  } else if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {  // edge AB
    double t = d1 / (d1 - d3);
    qx = ax + t * abx; qy = ay + t * aby; qz = az + t * abz;
  } else if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {  // edge AC
    double t = d2 / (d2 - d6);
    qx = ax + t * acx; qy = ay + t * acy; qz = az + t * acz;
  } else if (va <= 0.0 && d4 - d3 >= 0.0 && d5 - d6 >= 0.0) {  // edge BC
    double t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    qx = bx + t * (cx - bx); qy = by + t * (cy - by); qz = bz + t * (cz - bz);
  } else {  // interior
    double denom = 1.0 / (va + vb + vc);
    double v = vb * denom, w = vc * denom;
    qx = ax + abx * v + acx * w;
    qy = ay + aby * v + acy * w;
    qz = az + abz * v + acz * w;
  }
  double ex = px - qx, ey = py - qy, ez = pz - qz;
  double sq = ex * ex + ey * ey + ez * ez;
  if (std::isnan(sq)) {  // fully degenerate triangle: nearest of the edges
    double s0 = seg_sqdist_ref(px, py, pz, ax, ay, az, bx, by, bz);
    double s1 = seg_sqdist_ref(px, py, pz, ax, ay, az, cx, cy, cz);
    double s2 = seg_sqdist_ref(px, py, pz, bx, by, bz, cx, cy, cz);
    sq = s0 < s1 ? s0 : s1;
    sq = sq < s2 ? sq : s2;
  }
  return sq;
}

// Two-sided Moller-Trumbore. Returns t in [0, tmax] or +inf on miss; zero
// determinants fall out through NaN comparisons.
inline double ray_tri_ref(double ox, double oy, double oz, double dx,
                          double dy, double dz, double tmax, double ax,
                          double ay, double az, double bx, double by,
                          double bz, double cx, double cy, double cz) {
  double e1x = bx - ax, e1y = by - ay, e1z = bz - az;
  double e2x = cx - ax, e2y = cy - ay, e2z = cz - az;
  double pvx = dy * e2z - dz * e2y;
  double pvy = dz * e2x - dx * e2z;
  double pvz = dx * e2y - dy * e2x;
  double det = e1x * pvx + e1y * pvy + e1z * pvz;
  double inv = 1.0 / det;
  double tvx = ox - ax, tvy = oy - ay, tvz = oz - az;
  double u = (tvx * pvx + tvy * pvy + tvz * pvz) * inv;
  double qvx = tvy * e1z - tvz * e1y;
  double qvy = tvz * e1x - tvx * e1z;
  double qvz = tvx * e1y - tvy * e1x;
  double v = (dx * qvx + dy * qvy + dz * qvz) * inv;
  double t = (e2x * qvx + e2y * qvy + e2z * qvz) * inv;
  bool hit = (u >= 0.0) && (v >= 0.0) && (u + v <= 1.0) && (t >= 0.0) && (t <= tmax);
  return hit ? t : std::numeric_limits<double>::infinity();
}

// Closest point on triangle abc to p: same region walk as tri_sqdist_ref but
// returning the point. Used to report the winning point after a BVH query;
// keep the two in sync.
inline void tri_closest_point_ref(double px, double py, double pz, double ax,
                                  double ay, double az, double bx, double by,
                                  double bz, double cx, double cy, double cz,
                                  double out_q[3]) {
  double abx = bx - ax, aby = by - ay, abz = bz - az;
  double acx = cx - ax, acy = cy - ay, acz = cz - az;
  double apx = px - ax, apy = py - ay, apz = pz - az;
  double d1 = abx * apx + aby * apy + abz * apz;
  double d2 = acx * apx + acy * apy + acz * apz;
  double bpx = px - bx, bpy = py - by, bpz = pz - bz;
  double d3 = abx * bpx + aby * bpy + abz * bpz;
  double d4 = acx * bpx + acy * bpy + acz * bpz;
  double cpx = px - cx, cpy = py - cy, cpz = pz - cz;
  double d5 = abx * cpx + aby * cpy + abz * cpz;
  double d6 = acx * cpx + acy * cpy + acz * cpz;
  double vc = d1 * d4 - d3 * d2;
  double vb = d5 * d2 - d1 * d6;
  double va = d3 * d6 - d5 * d4;

  double qx, qy, qz;
  if (d1 <= 0.0 && d2 <= 0.0) {
    qx = ax; qy = ay; qz = az;
  } else if (d3 >= 0.0 && d4 <= d3) {
    qx = bx; qy = by; qz = bz;
  } else if (d6 >= 0.0 && d5 <= d6) {
    qx = cx; qy = cy; qz = cz;
  } else if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    double t = d1 / (d1 - d3);
    qx = ax + t * abx; qy = ay + t * aby; qz = az + t * abz;
  } else if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    double t = d2 / (d2 - d6);
    qx = ax + t * acx; qy = ay + t * acy; qz = az + t * acz;
  } else if (va <= 0.0 && d4 - d3 >= 0.0 && d5 - d6 >= 0.0) {
    double t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    qx = bx + t * (cx - bx); qy = by + t * (cy - by); qz = bz + t * (cz - bz);
  } else {
    double denom = 1.0 / (va + vb + vc);
    double v = vb * denom, w = vc * denom;
    qx = ax + abx * v + acx * w;
    qy = ay + aby * v + acy * w;
    qz = az + abz * v + acz * w;
  }
  if (std::isnan(qx + qy + qz)) {
    // Degenerate triangle: nearest point among the three edges.
    struct Seg { double ax, ay, az, bx, by, bz; };
    const Seg segs[3] = {{ax, ay, az, bx, by, bz},
                         {ax, ay, az, cx, cy, cz},
                         {bx, by, bz, cx, cy, cz}};
    double best = std::numeric_limits<double>::infinity();
    for (const Seg& s : segs) {
      double dx = s.bx - s.ax, dy = s.by - s.ay, dz = s.bz - s.az;
      double t = ((px - s.ax) * dx + (py - s.ay) * dy + (pz - s.az) * dz) /
                 (dx * dx + dy * dy + dz * dz);
      t = t < 1.0 ? t : 1.0;
      t = t > 0.0 ? t : 0.0;
      double sx = s.ax + t * dx, sy = s.ay + t * dy, sz = s.az + t * dz;
      double sq = (px - sx) * (px - sx) + (py - sy) * (py - sy) + (pz - sz) * (pz - sz);
      if (sq < best) {
        best = sq;
        qx = sx; qy = sy; qz = sz;
      }
    }
  }
  out_q[0] = qx;
  out_q[1] = qy;
  out_q[2] = qz;
}

inline double quantize_ref(double v, double origin, double inv_step,
                           double qmax) {
  double r = std::nearbyint((v - origin) * inv_step);
  r = r > 0.0 ? r : 0.0;  // NaN clamps to 0
  r = r < qmax ? r : qmax;
  return r;
}

}  // namespace reef::simd
