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

#include <limits>
#include <optional>

#include "reef/mesh.hpp"

// Brute-force oracles, intentionally written with formulations different from
// the library's kernels so they fail independently.

namespace reef::testing {

inline double oracle_seg_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  Vec3 d = b - a;
  double dd = length_sq(d);
  double t = dd > 0.0 ? dot(p - a, d) / dd : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return length(p - (a + d * t));
}

// Plane projection + barycentric test, falling back to edge distances.
inline double oracle_tri_distance(const Vec3& p, const Vec3& a, const Vec3& b,
                                  const Vec3& c) {
  Vec3 n = cross(b - a, c - a);
  double nn = length_sq(n);
  if (nn > 0.0) {
    double dist_plane = dot(p - a, n) / std::sqrt(nn);
    Vec3 proj = p - n * (dot(p - a, n) / nn);
    // Barycentric coordinates of proj.
    Vec3 v0 = b - a, v1 = c - a, v2 = proj - a;
    double d00 = dot(v0, v0), d01 = dot(v0, v1), d11 = dot(v1, v1);
    double d20 = dot(v2, v0), d21 = dot(v2, v1);
    double denom = d00 * d11 - d01 * d01;
    if (denom > 0.0) {
      double v = (d11 * d20 - d01 * d21) / denom;
      double w = (d00 * d21 - d01 * d20) / denom;
      if (v >= 0.0 && w >= 0.0 && v + w <= 1.0) return std::fabs(dist_plane);
    }
  }
  double d0 = oracle_seg_distance(p, a, b);
  double d1 = oracle_seg_distance(p, a, c);
  double d2 = oracle_seg_distance(p, b, c);
  return std::min({d0, d1, d2});
}

struct OracleClosest {
  uint32_t face;
  double distance;
};

inline OracleClosest oracle_closest_point(const TriangleMesh& mesh, const Vec3& p) {
  OracleClosest best{0, std::numeric_limits<double>::infinity()};
  for (uint32_t f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    double d = oracle_tri_distance(p, mesh.positions[t[0]], mesh.positions[t[1]],
                                   mesh.positions[t[2]]);
    if (d < best.distance) best = {f, d};
  }
  return best;
}

// Plane intersection + barycentric containment, two-sided.
inline std::optional<double> oracle_ray_tri(const Vec3& o, const Vec3& dir,
                                            double tmax, const Vec3& a,
                                            const Vec3& b, const Vec3& c) {
  Vec3 n = cross(b - a, c - a);
  double denom = dot(dir, n);
  if (denom == 0.0) return std::nullopt;
  double t = dot(a - o, n) / denom;
  if (t < 0.0 || t > tmax) return std::nullopt;
  Vec3 q = o + dir * t;
  Vec3 v0 = b - a, v1 = c - a, v2 = q - a;
  double d00 = dot(v0, v0), d01 = dot(v0, v1), d11 = dot(v1, v1);
  double d20 = dot(v2, v0), d21 = dot(v2, v1);
  double det = d00 * d11 - d01 * d01;
  if (det <= 0.0) return std::nullopt;
  double v = (d11 * d20 - d01 * d21) / det;
  double w = (d00 * d21 - d01 * d20) / det;
  if (v < -1e-12 || w < -1e-12 || v + w > 1.0 + 1e-12) return std::nullopt;
  return t;
}

struct OracleRayHit {
  uint32_t face;
  double t;
};

inline std::optional<OracleRayHit> oracle_raycast(const TriangleMesh& mesh,
                                                  const Vec3& o, const Vec3& dir,
                                                  double tmax) {
  std::optional<OracleRayHit> best;
  for (uint32_t f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    auto hit = oracle_ray_tri(o, dir, tmax, mesh.positions[t[0]],
                              mesh.positions[t[1]], mesh.positions[t[2]]);
    if (hit && (!best || *hit < best->t)) best = OracleRayHit{f, *hit};
  }
  return best;
}

}  // namespace reef::testing
