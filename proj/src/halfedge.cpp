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

#include "reef/halfedge.hpp"

#include <algorithm>

#include "reef/error.hpp"

namespace reef {

HalfEdgeMesh build_halfedge(const TriangleMesh& mesh) {
  require_valid(mesh);
  HalfEdgeMesh he;
  size_t hcount = mesh.face_count() * 3;
  he.origin.resize(hcount);
  he.twin.assign(hcount, HalfEdgeMesh::kInvalid);
  he.vertex_halfedge.assign(mesh.vertex_count(), HalfEdgeMesh::kInvalid);

  // Directed edge key -> half-edge, via one sort.
  struct Rec {
    uint64_t key;
    uint32_t h;
  };
  std::vector<Rec> recs(hcount);
  for (size_t f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    for (uint32_t k = 0; k < 3; ++k) {
      uint32_t h = uint32_t(3 * f + k);
      uint32_t a = t[k], b = t[(k + 1) % 3];
      he.origin[h] = a;
      he.vertex_halfedge[a] = h;
      recs[h] = {uint64_t(a) << 32 | b, h};
    }
  }
  std::sort(recs.begin(), recs.end(),
            [](const Rec& a, const Rec& b) { return a.key < b.key; });

  auto edge_name = [](uint64_t key) {
    return "(" + std::to_string(uint32_t(key >> 32)) + ", " +
           std::to_string(uint32_t(key)) + ")";
  };

  // Two identically directed half-edges mean a non-manifold or inconsistently
  // oriented edge; either breaks the twin involution.
  for (size_t i = 0; i + 1 < recs.size(); ++i)
    if (recs[i].key == recs[i + 1].key)
      throw TopologyError("non-manifold or inconsistently oriented edge " +
                          edge_name(recs[i].key));

  for (const Rec& r : recs) {
    uint64_t rev = uint64_t(uint32_t(r.key)) << 32 | uint32_t(r.key >> 32);
    auto it = std::lower_bound(
        recs.begin(), recs.end(), rev,
        [](const Rec& a, uint64_t key) { return a.key < key; });
    if (it != recs.end() && it->key == rev) he.twin[r.h] = it->h;
  }

  // Make boundary vertices point at an outgoing boundary half-edge so ring
  // walks can start from the boundary.
  for (uint32_t h = 0; h < hcount; ++h)
    if (he.twin[h] == HalfEdgeMesh::kInvalid) he.vertex_halfedge[he.origin[h]] = h;

  return he;
}

}  // namespace reef
