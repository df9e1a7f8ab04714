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
#include <vector>

#include "reef/mesh.hpp"

namespace reef {

// Half-edge connectivity over a TriangleMesh. Half-edge h belongs to face
// h / 3; next/prev stay inside the face by construction, so the 3-cycle
// invariant is structural. Boundary half-edges have no twin.
struct HalfEdgeMesh {
  static constexpr uint32_t kInvalid = 0xFFFFFFFFu;

  std::vector<uint32_t> origin;          // size 3F
  std::vector<uint32_t> twin;            // size 3F, kInvalid on boundary
  std::vector<uint32_t> vertex_halfedge; // one outgoing half-edge per vertex

  static uint32_t face(uint32_t h) { return h / 3; }
  static uint32_t next(uint32_t h) { return h - h % 3 + (h + 1) % 3; }
  static uint32_t prev(uint32_t h) { return h - h % 3 + (h + 2) % 3; }
  uint32_t dest(uint32_t h) const { return origin[next(h)]; }
  bool is_boundary(uint32_t h) const { return twin[h] == kInvalid; }
  size_t halfedge_count() const { return origin.size(); }

  size_t boundary_count() const {
    size_t n = 0;
    for (uint32_t t : twin) n += t == kInvalid;
    return n;
  }
};

// Builds connectivity. Requires an edge-manifold, consistently oriented mesh;
// throws TopologyError naming the offending edge otherwise.
HalfEdgeMesh build_halfedge(const TriangleMesh& mesh);

}  // namespace reef
