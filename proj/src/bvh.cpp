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

#include "reef/bvh.hpp"

#include <algorithm>
#include <limits>

#include "reef/error.hpp"
#include "reef/simd/kernels.hpp"
#include "reef/simd/scalar_ref.hpp"

namespace reef {

namespace {
constexpr uint32_t kLeafSize = 8;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

Bvh::Bvh(const TriangleMesh& mesh) {
  if (mesh.face_count() == 0) throw Error("BVH over an empty mesh");
  require_valid(mesh);

  uint32_t n = uint32_t(mesh.face_count());
  std::vector<uint32_t> order(n);
  std::vector<Vec3> centroids(n);
  for (uint32_t f = 0; f < n; ++f) {
    order[f] = f;
    const auto& t = mesh.faces[f];
    centroids[f] = (mesh.positions[t[0]] + mesh.positions[t[1]] +
                    mesh.positions[t[2]]) / 3.0;
  }
  nodes_.reserve(2 * size_t(n) / kLeafSize + 2);
  build(order, centroids, mesh, 0, n);

  face_ids_ = std::move(order);
  ax_.resize(n); ay_.resize(n); az_.resize(n);
  bx_.resize(n); by_.resize(n); bz_.resize(n);
  cx_.resize(n); cy_.resize(n); cz_.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    const auto& t = mesh.faces[face_ids_[i]];
    const Vec3 &a = mesh.positions[t[0]], &b = mesh.positions[t[1]],
               &c = mesh.positions[t[2]];
    ax_[i] = a.x; ay_[i] = a.y; az_[i] = a.z;
    bx_[i] = b.x; by_[i] = b.y; bz_[i] = b.z;
    cx_[i] = c.x; cy_[i] = c.y; cz_[i] = c.z;
  }
}

uint32_t Bvh::build(std::vector<uint32_t>& order, std::vector<Vec3>& centroids,
                    const TriangleMesh& mesh, uint32_t first, uint32_t count) {
  uint32_t id = uint32_t(nodes_.size());
  nodes_.emplace_back();

  Box3 box, cbox;
  for (uint32_t i = first; i < first + count; ++i) {
    const auto& t = mesh.faces[order[i]];
    box.extend(mesh.positions[t[0]]);
    box.extend(mesh.positions[t[1]]);
    box.extend(mesh.positions[t[2]]);
    cbox.extend(centroids[order[i]]);
  }
  nodes_[id].box = box;

  Vec3 ext = cbox.extent();
  int axis = ext.x >= ext.y ? (ext.x >= ext.z ? 0 : 2) : (ext.y >= ext.z ? 1 : 2);
  if (count <= kLeafSize || ext[axis] <= 0.0) {
    nodes_[id].leaf = true;
    nodes_[id].a = first;
    nodes_[id].b = count;
    return id;
  }

  uint32_t mid = first + count / 2;
  // Index tiebreak keeps the split order fully deterministic.
  std::nth_element(order.begin() + first, order.begin() + mid,
                   order.begin() + first + count,
                   [&](uint32_t l, uint32_t r) {
                     double cl = centroids[l][axis], cr = centroids[r][axis];
                     return cl < cr || (cl == cr && l < r);
                   });
  uint32_t left = build(order, centroids, mesh, first, mid - first);
  uint32_t right = build(order, centroids, mesh, mid, first + count - mid);
  nodes_[id].a = left;
  nodes_[id].b = right;
  return id;
}

Bvh::ClosestHit Bvh::closest_point(const Vec3& p) const {
  const auto& k = simd::kernels();
  double pt[3] = {p.x, p.y, p.z};
  double best_sq = kInf;
  uint32_t best_face = 0xFFFFFFFFu;
  uint32_t best_slot = 0;
  double dist[kLeafSize];

  struct Item {
    uint32_t node;
    double sq;
  };
  Item stack[64];
  int top = 0;
  stack[top++] = {0, nodes_[0].box.sq_distance(p)};

  while (top > 0) {
    Item it = stack[--top];
    if (it.sq > best_sq) continue;
    const Node& node = nodes_[it.node];
    if (node.leaf) {
      k.tri_sqdist(pt, ax_.data() + node.a, ay_.data() + node.a,
                   az_.data() + node.a, bx_.data() + node.a,
                   by_.data() + node.a, bz_.data() + node.a,
                   cx_.data() + node.a, cy_.data() + node.a,
                   cz_.data() + node.a, node.b, dist);
      for (uint32_t i = 0; i < node.b; ++i) {
        uint32_t fid = face_ids_[node.a + i];
        if (dist[i] < best_sq || (dist[i] == best_sq && fid < best_face)) {
          best_sq = dist[i];
          best_face = fid;
          best_slot = node.a + i;
        }
      }
      continue;
    }
    double sqa = nodes_[node.a].box.sq_distance(p);
    double sqb = nodes_[node.b].box.sq_distance(p);
    // Push the farther child first so the nearer one is processed next.
    if (sqa <= sqb) {
      if (sqb <= best_sq) stack[top++] = {node.b, sqb};
      if (sqa <= best_sq) stack[top++] = {node.a, sqa};
    } else {
      if (sqa <= best_sq) stack[top++] = {node.a, sqa};
      if (sqb <= best_sq) stack[top++] = {node.b, sqb};
    }
  }

  ClosestHit hit;
  hit.face = best_face;
  hit.distance = std::sqrt(best_sq);
  double q[3];
  simd::tri_closest_point_ref(pt[0], pt[1], pt[2], ax_[best_slot],
                              ay_[best_slot], az_[best_slot], bx_[best_slot],
                              by_[best_slot], bz_[best_slot], cx_[best_slot],
                              cy_[best_slot], cz_[best_slot], q);
  hit.point = {q[0], q[1], q[2]};
  return hit;
}

namespace {

// Ray/box overlap on [0, limit]; degenerate direction components are handled
// per axis rather than through IEEE division tricks.
inline bool ray_box(const Box3& box, const Vec3& o, const Vec3& d,
                    double limit, double& enter) {
  double t0 = 0.0, t1 = limit;
  for (int i = 0; i < 3; ++i) {
    if (d[i] == 0.0) {
      if (o[i] < box.lo[i] || o[i] > box.hi[i]) return false;
      continue;
    }
    double inv = 1.0 / d[i];
    double ta = (box.lo[i] - o[i]) * inv;
    double tb = (box.hi[i] - o[i]) * inv;
    if (ta > tb) std::swap(ta, tb);
    if (ta > t0) t0 = ta;
    if (tb < t1) t1 = tb;
    if (t0 > t1) return false;
  }
  enter = t0;
  return true;
}

}  // namespace

std::optional<Bvh::RayHit> Bvh::raycast(const Vec3& origin, const Vec3& dir,
                                        double tmax) const {
  const auto& k = simd::kernels();
  double o[3] = {origin.x, origin.y, origin.z};
  double d[3] = {dir.x, dir.y, dir.z};
  double best_t = kInf;
  uint32_t best_face = 0xFFFFFFFFu;
  double ts[kLeafSize];

  uint32_t stack[64];
  int top = 0;
  double enter;
  if (ray_box(nodes_[0].box, origin, dir, tmax, enter)) stack[top++] = 0;

  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (node.leaf) {
      k.ray_tri(o, d, tmax, ax_.data() + node.a, ay_.data() + node.a,
                az_.data() + node.a, bx_.data() + node.a, by_.data() + node.a,
                bz_.data() + node.a, cx_.data() + node.a, cy_.data() + node.a,
                cz_.data() + node.a, node.b, ts);
      for (uint32_t i = 0; i < node.b; ++i) {
        uint32_t fid = face_ids_[node.a + i];
        if (ts[i] < best_t || (ts[i] == best_t && fid < best_face)) {
          best_t = ts[i];
          best_face = fid;
        }
      }
      continue;
    }
    double limit = best_t < tmax ? best_t : tmax;
    double ea, eb;
    bool ha = ray_box(nodes_[node.a].box, origin, dir, limit, ea);
    bool hb = ray_box(nodes_[node.b].box, origin, dir, limit, eb);
    if (ha && hb) {
      if (ea <= eb) {
        stack[top++] = node.b;
        stack[top++] = node.a;
      } else {
        stack[top++] = node.a;
        stack[top++] = node.b;
      }
    } else if (ha) {
      stack[top++] = node.a;
    } else if (hb) {
      stack[top++] = node.b;
    }
  }

  if (best_face == 0xFFFFFFFFu) return std::nullopt;
  return RayHit{best_face, best_t};
}

}  // namespace reef
