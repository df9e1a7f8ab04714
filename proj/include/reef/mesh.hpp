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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reef/vec.hpp"

namespace reef {

// Per-corner tangent frame: unit tangent plus handedness sign (+1/-1).
struct Tangent {
  Vec3 t;
  double w = 1.0;
};

// Indexed triangle mesh, the unit of every pipeline stage. Attributes are
// optional: normals are per-vertex, UVs and tangents are per-corner (three
// entries per face). All operations treat instances as immutable values.
struct TriangleMesh {
  std::vector<Vec3> positions;
  std::vector<std::array<uint32_t, 3>> faces;
  std::vector<Vec3> normals;       // empty or positions.size()
  std::vector<Vec2> corner_uvs;    // empty or 3 * faces.size()
  std::vector<Tangent> tangents;   // empty or 3 * faces.size()

  size_t vertex_count() const { return positions.size(); }
  size_t face_count() const { return faces.size(); }
  bool has_normals() const { return !normals.empty(); }
  bool has_uvs() const { return !corner_uvs.empty(); }
  bool has_tangents() const { return !tangents.empty(); }
};

struct ValidationReport {
  bool invariants_ok = true;
  std::string invariant_error;  // set when invariants_ok is false
  bool is_edge_manifold = false;
  bool is_closed = false;
  bool is_orientable = false;
  int64_t boundary_edge_count = 0;
  int64_t degenerate_face_count = 0;
  int64_t connected_component_count = 0;
  int64_t euler_characteristic = 0;
};

// Degenerate-face threshold: squared area at or below this counts as zero.
inline constexpr double kDegenerateSqArea = 1e-12;

// First violated TriangleMesh invariant (index range, repeated corners,
// finiteness, unit normals), or nullopt if all hold.
std::optional<std::string> invariant_violation(const TriangleMesh& mesh);

// Throws Error if the mesh violates its invariants.
void require_valid(const TriangleMesh& mesh);

// Structural report. Invariants are checked first; topology flags are only
// computed when they hold. "Orientable" means consistently wound as given:
// every interior edge is traversed in opposite directions by its two faces.
ValidationReport validate(const TriangleMesh& mesh);

Vec3 face_normal(const TriangleMesh& mesh, size_t face);
double face_area(const TriangleMesh& mesh, size_t face);
Box3 bounds(const TriangleMesh& mesh);
double total_area(const TriangleMesh& mesh);

// Signed volume via the divergence theorem (exact for closed meshes).
double signed_volume(const TriangleMesh& mesh);

// Area-weighted per-vertex normals, normalized. Faces with zero area
// contribute nothing; vertices with no incident area get a zero vector.
std::vector<Vec3> compute_vertex_normals(const TriangleMesh& mesh);

// FNV-1a over positions, faces, and present attributes. Detects any content
// change; used by determinism checks and pipeline manifests.
uint64_t content_hash(const TriangleMesh& mesh);

uint64_t fnv1a(const void* data, size_t size, uint64_t state = 0xcbf29ce484222325ull);

}  // namespace reef
