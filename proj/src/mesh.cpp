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

#include "reef/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "reef/error.hpp"

namespace reef {

std::optional<std::string> invariant_violation(const TriangleMesh& mesh) {
  size_t v = mesh.vertex_count();
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& t = mesh.faces[f];
    for (int k = 0; k < 3; ++k)
      if (t[k] >= v)
        return "face " + std::to_string(f) + " references vertex " +
               std::to_string(t[k]) + " out of range (vertex count " +
               std::to_string(v) + ")";
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      return "face " + std::to_string(f) + " references the same vertex twice";
  }
  for (size_t i = 0; i < v; ++i)
    if (!is_finite(mesh.positions[i]))
      return "vertex " + std::to_string(i) + " has a non-finite coordinate";
  if (!mesh.normals.empty()) {
    if (mesh.normals.size() != v) return "normal count does not match vertex count";
    for (size_t i = 0; i < v; ++i) {
      if (!is_finite(mesh.normals[i]))
        return "normal " + std::to_string(i) + " has a non-finite coordinate";
      double len = length(mesh.normals[i]);
      if (std::fabs(len - 1.0) > 1e-4)
        return "normal " + std::to_string(i) + " is not unit length";
    }
  }
  if (!mesh.corner_uvs.empty() && mesh.corner_uvs.size() != mesh.faces.size() * 3)
    return "corner UV count does not match 3 * face count";
  if (!mesh.tangents.empty() && mesh.tangents.size() != mesh.faces.size() * 3)
    return "tangent count does not match 3 * face count";
  return std::nullopt;
}

void require_valid(const TriangleMesh& mesh) {
  if (auto err = invariant_violation(mesh)) throw Error("invalid mesh: " + *err);
}

namespace {

// Directed edge record for the sort-based edge scan.
struct EdgeRec {
  uint64_t key;      // (min << 32) | max
  uint8_t forward;   // 1 if traversed min->max
};

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ValidationReport validate(const TriangleMesh& mesh) {
  ValidationReport r;
  if (auto err = invariant_violation(mesh)) {
    r.invariants_ok = false;
    r.invariant_error = *err;
    return r;
  }

  size_t fc = mesh.face_count();
  std::vector<EdgeRec> edges;
  edges.reserve(fc * 3);
  for (size_t f = 0; f < fc; ++f) {
    const auto& t = mesh.faces[f];
    for (int k = 0; k < 3; ++k) {
      uint32_t a = t[k], b = t[(k + 1) % 3];
      uint64_t key = a < b ? (uint64_t(a) << 32 | b) : (uint64_t(b) << 32 | a);
      edges.push_back({key, uint8_t(a < b)});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.key < b.key; });

  r.is_edge_manifold = true;
  r.is_orientable = true;
  int64_t unique_edges = 0;
  for (size_t i = 0; i < edges.size();) {
    size_t j = i;
    int forward = 0;
    while (j < edges.size() && edges[j].key == edges[i].key) {
      forward += edges[j].forward;
      ++j;
    }
    ++unique_edges;
    size_t count = j - i;
    if (count == 1) ++r.boundary_edge_count;
    if (count > 2) r.is_edge_manifold = false;
    // Interior edges must be traversed once in each direction.
    if (count == 2 && forward != 1) r.is_orientable = false;
    i = j;
  }
  r.is_closed = r.boundary_edge_count == 0;

  for (size_t f = 0; f < fc; ++f) {
    const auto& t = mesh.faces[f];
    Vec3 n = cross(mesh.positions[t[1]] - mesh.positions[t[0]],
                   mesh.positions[t[2]] - mesh.positions[t[0]]);
    if (length_sq(n) * 0.25 <= kDegenerateSqArea) ++r.degenerate_face_count;
  }

  UnionFind uf(mesh.vertex_count());
  for (const auto& t : mesh.faces) {
    uf.unite(t[0], t[1]);
    uf.unite(t[1], t[2]);
  }
  int64_t components = 0;
  for (uint32_t i = 0; i < mesh.vertex_count(); ++i)
    if (uf.find(i) == i) ++components;
  r.connected_component_count = components;

  r.euler_characteristic =
      int64_t(mesh.vertex_count()) - unique_edges + int64_t(fc);
  return r;
}

Vec3 face_normal(const TriangleMesh& mesh, size_t face) {
  const auto& t = mesh.faces[face];
  return normalized(cross(mesh.positions[t[1]] - mesh.positions[t[0]],
                          mesh.positions[t[2]] - mesh.positions[t[0]]));
}

double face_area(const TriangleMesh& mesh, size_t face) {
  const auto& t = mesh.faces[face];
  return 0.5 * length(cross(mesh.positions[t[1]] - mesh.positions[t[0]],
                            mesh.positions[t[2]] - mesh.positions[t[0]]));
}

Box3 bounds(const TriangleMesh& mesh) {
  Box3 box;
  for (const auto& p : mesh.positions) box.extend(p);
  return box;
}

double total_area(const TriangleMesh& mesh) {
  double area = 0.0;
  for (size_t f = 0; f < mesh.face_count(); ++f) area += face_area(mesh, f);
  return area;
}

double signed_volume(const TriangleMesh& mesh) {
  double vol = 0.0;
  for (const auto& t : mesh.faces) {
    const Vec3 &a = mesh.positions[t[0]], &b = mesh.positions[t[1]],
               &c = mesh.positions[t[2]];
    vol += dot(a, cross(b, c));
  }
  return vol / 6.0;
}

std::vector<Vec3> compute_vertex_normals(const TriangleMesh& mesh) {
  std::vector<Vec3> acc(mesh.vertex_count());
  for (const auto& t : mesh.faces) {
    Vec3 n = cross(mesh.positions[t[1]] - mesh.positions[t[0]],
                   mesh.positions[t[2]] - mesh.positions[t[0]]);
    // n has twice the face area as magnitude, giving the area weighting.
    for (int k = 0; k < 3; ++k) acc[t[k]] += n;
  }
  for (auto& n : acc) n = normalized(n);
  return acc;
}

uint64_t fnv1a(const void* data, size_t size, uint64_t state) {
  const uint8_t* p = static_cast<const uint8_t*>(data);
  for (size_t i = 0; i < size; ++i) {
    state ^= p[i];
    state *= 0x100000001b3ull;
  }
  return state;
}

uint64_t content_hash(const TriangleMesh& mesh) {
  uint64_t h = fnv1a(mesh.positions.data(), mesh.positions.size() * sizeof(Vec3));
  h = fnv1a(mesh.faces.data(), mesh.faces.size() * sizeof(std::array<uint32_t, 3>), h);
  h = fnv1a(mesh.normals.data(), mesh.normals.size() * sizeof(Vec3), h);
  h = fnv1a(mesh.corner_uvs.data(), mesh.corner_uvs.size() * sizeof(Vec2), h);
  h = fnv1a(mesh.tangents.data(), mesh.tangents.size() * sizeof(Tangent), h);
  return h;
}

}  // namespace reef
