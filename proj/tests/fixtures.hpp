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
#include <map>

#include "reef/mesh.hpp"
#include "reef/rng.hpp"

namespace reef::testing {

inline TriangleMesh tetrahedron() {
  TriangleMesh m;
  m.positions = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  m.faces = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  return m;
}

inline TriangleMesh single_triangle() {
  TriangleMesh m;
  m.positions = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.faces = {{0, 1, 2}};
  return m;
}

// Regular icosahedron, outward winding, circumradius 1.
inline TriangleMesh icosahedron() {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = 1.0 / std::sqrt(1.0 + p * p);
  TriangleMesh m;
  m.positions = {{-1, p, 0}, {1, p, 0},  {-1, -p, 0}, {1, -p, 0},
                 {0, -1, p}, {0, 1, p},  {0, -1, -p}, {0, 1, -p},
                 {p, 0, -1}, {p, 0, 1},  {-p, 0, -1}, {-p, 0, 1}};
  for (auto& v : m.positions) v *= s;
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  return m;
}

// Icosahedron subdivided `levels` times with vertices projected to the unit
// sphere: 20 * 4^levels faces (levels=2 gives the 320-face fixture).
inline TriangleMesh icosphere(int levels) {
  TriangleMesh m = icosahedron();
  for (int l = 0; l < levels; ++l) {
    TriangleMesh next;
    next.positions = m.positions;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> midpoint;
    auto mid = [&](uint32_t a, uint32_t b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      uint32_t id = uint32_t(next.positions.size());
      next.positions.push_back(normalized(m.positions[a] + m.positions[b]));
      midpoint.emplace(key, id);
      return id;
    };
    for (const auto& t : m.faces) {
      uint32_t e01 = mid(t[0], t[1]), e12 = mid(t[1], t[2]), e20 = mid(t[2], t[0]);
      next.faces.push_back({t[0], e01, e20});
      next.faces.push_back({t[1], e12, e01});
      next.faces.push_back({t[2], e20, e12});
      next.faces.push_back({e01, e12, e20});
    }
    m = std::move(next);
  }
  return m;
}

// Regular (n+1)x(n+1) vertex grid in the z=0 plane, 2*n*n faces.
inline TriangleMesh plane_grid(int n, double size = 1.0) {
  TriangleMesh m;
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x)
      m.positions.push_back({size * x / n, size * y / n, 0.0});
  auto id = [&](int x, int y) { return uint32_t(y * (n + 1) + x); };
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      m.faces.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1)});
      m.faces.push_back({id(x, y), id(x + 1, y + 1), id(x, y + 1)});
    }
  return m;
}

// Axis-aligned unit cube as 12 triangles, outward winding.
inline TriangleMesh cube() {
  TriangleMesh m;
  m.positions = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                 {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  m.faces = {{0, 2, 1}, {0, 3, 2},   // z = 0
             {4, 5, 6}, {4, 6, 7},   // z = 1
             {0, 1, 5}, {0, 5, 4},   // y = 0
             {2, 3, 7}, {2, 7, 6},   // y = 1
             {1, 2, 6}, {1, 6, 5},   // x = 1
             {3, 0, 4}, {3, 4, 7}};  // x = 0
  return m;
}

// Random blob: icosphere radially perturbed by a smooth seeded bump. Closed,
// manifold, orientable for any seed.
inline TriangleMesh random_blob(uint64_t seed, int levels = 2) {
  TriangleMesh m = icosphere(levels);
  Rng rng(seed);
  Vec3 axes[4];
  double amp[4], phase[4];
  for (int i = 0; i < 4; ++i) {
    axes[i] = normalized({rng.next_range(-1, 1), rng.next_range(-1, 1),
                          rng.next_range(-1, 1)});
    amp[i] = rng.next_range(0.02, 0.12);
    phase[i] = rng.next_range(0.0, 6.28318);
    if (length(axes[i]) == 0.0) axes[i] = {1, 0, 0};
  }
  for (auto& v : m.positions) {
    double r = 1.0;
    for (int i = 0; i < 4; ++i)
      r += amp[i] * std::sin(3.0 * dot(v, axes[i]) + phase[i]);
    v *= r;
  }
  return m;
}

}  // namespace reef::testing
