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
#include <optional>
#include <vector>

#include "reef/mesh.hpp"

namespace reef {

// Immutable AABB tree over a mesh's triangles, safe for concurrent queries.
// Leaf tests run through the SIMD kernel table; ties between equidistant
// triangles resolve to the lowest original face index, which makes query
// results identical to a full scan.
class Bvh {
 public:
  explicit Bvh(const TriangleMesh& mesh);  // throws Error on an empty mesh

  struct ClosestHit {
    uint32_t face = 0;
    double distance = 0.0;
    Vec3 point;
  };

  struct RayHit {
    uint32_t face = 0;
    double t = 0.0;
  };

  ClosestHit closest_point(const Vec3& p) const;

  // Nearest two-sided intersection with t in [0, tmax].
  std::optional<RayHit> raycast(const Vec3& origin, const Vec3& dir,
                                double tmax) const;

  const Box3& bounds() const { return nodes_[0].box; }
  size_t triangle_count() const { return face_ids_.size(); }

 private:
  struct Node {
    Box3 box;
    uint32_t a = 0, b = 0;  // children, or (first, count) when leaf
    bool leaf = false;
  };

  uint32_t build(std::vector<uint32_t>& order, std::vector<Vec3>& centroids,
                 const TriangleMesh& mesh, uint32_t first, uint32_t count);

  std::vector<Node> nodes_;
  std::vector<uint32_t> face_ids_;  // leaf slot -> original face index
  // Triangle corners in leaf order, SoA for the kernels.
  std::vector<double> ax_, ay_, az_, bx_, by_, bz_, cx_, cy_, cz_;
};

}  // namespace reef
