#include "urbansynth/bvh.hpp"

#include <algorithm>
#include <numeric>

namespace urbansynth {

namespace {

constexpr int kSahBins = 16;
constexpr int kLeafMax = 4;

struct BuildPrim {
  Aabb bounds;
  Vec3 centroid;
  uint32_t mesh_index;
  uint32_t tri_index;
};

struct BuildRange {
  uint32_t begin, end;
  uint32_t node_index;
};

}  // namespace

Bvh Bvh::build(std::span<const TriangleMesh> meshes) {
  Bvh bvh;

  std::vector<BuildPrim> prims;
  for (uint32_t m = 0; m < meshes.size(); ++m) {
    const TriangleMesh& mesh = meshes[m];
    for (uint32_t t = 0; t < mesh.triangle_count(); ++t) {
      BuildPrim p;
      p.bounds = mesh.triangle_bounds(t);
      p.centroid = p.bounds.centroid();
      p.mesh_index = m;
      p.tri_index = t;
      prims.push_back(p);
    }
  }
  if (prims.empty()) return bvh;

  bvh.nodes_.reserve(2 * prims.size());
  bvh.nodes_.push_back({});

  std::vector<BuildRange> stack;
  stack.push_back({0, static_cast<uint32_t>(prims.size()), 0});

  while (!stack.empty()) {
    const BuildRange range = stack.back();
    stack.pop_back();

    Aabb bounds, centroid_bounds;
    for (uint32_t i = range.begin; i < range.end; ++i) {
      bounds.grow(prims[i].bounds);
      centroid_bounds.grow(prims[i].centroid);
    }

    Node& node = bvh.nodes_[range.node_index];
    node.bounds = bounds;
    const uint32_t count = range.end - range.begin;

    const Vec3 cext = centroid_bounds.extent();
    int axis = 0;
    if (cext.y > cext.x) axis = 1;
    if (cext.z > cext[axis]) axis = 2;

    if (count <= kLeafMax || cext[axis] <= 0.0f) {
      node.right_or_first = range.begin;
      node.count = static_cast<uint16_t>(count);
      continue;
    }

    // Binned SAH along the widest centroid axis.
    struct Bin {
      Aabb bounds;
      uint32_t count = 0;
    };
    Bin bins[kSahBins];
    const float lo = centroid_bounds.lo[axis];
    const float scale = kSahBins / cext[axis];
    auto bin_of = [&](const BuildPrim& p) {
      int b = static_cast<int>((p.centroid[axis] - lo) * scale);
      return std::min(b, kSahBins - 1);
    };
    for (uint32_t i = range.begin; i < range.end; ++i) {
      Bin& b = bins[bin_of(prims[i])];
      b.bounds.grow(prims[i].bounds);
      b.count++;
    }

    float right_area[kSahBins];
    Aabb acc;
    for (int i = kSahBins - 1; i > 0; --i) {
      acc.grow(bins[i].bounds);
      right_area[i] = acc.surface_area();
    }
    acc = Aabb{};
    float best_cost = kRayInfinity;
    int best_split = -1;
    uint32_t left_count = 0;
    for (int i = 0; i < kSahBins - 1; ++i) {
      acc.grow(bins[i].bounds);
      left_count += bins[i].count;
      if (left_count == 0 || left_count == count) continue;
      const float cost =
          acc.surface_area() * left_count + right_area[i + 1] * (count - left_count);
      if (cost < best_cost) {
        best_cost = cost;
        best_split = i;
      }
    }

    uint32_t mid;
    if (best_split < 0) {
      mid = range.begin + count / 2;
      std::nth_element(prims.begin() + range.begin, prims.begin() + mid,
                       prims.begin() + range.end, [axis](const BuildPrim& a, const BuildPrim& b) {
                         return a.centroid[axis] < b.centroid[axis];
                       });
    } else {
      auto it = std::partition(prims.begin() + range.begin, prims.begin() + range.end,
                               [&](const BuildPrim& p) { return bin_of(p) <= best_split; });
      mid = static_cast<uint32_t>(it - prims.begin());
      if (mid == range.begin || mid == range.end) mid = range.begin + count / 2;
    }

    node.count = 0;
    node.axis = static_cast<uint8_t>(axis);
    const uint32_t left_index = static_cast<uint32_t>(bvh.nodes_.size());
    bvh.nodes_.push_back({});
    const uint32_t right_index = static_cast<uint32_t>(bvh.nodes_.size());
    bvh.nodes_.push_back({});
    bvh.nodes_[range.node_index].right_or_first = right_index;
    // Right pushed first so the left range is processed next (preorder).
    stack.push_back({mid, range.end, right_index});
    stack.push_back({range.begin, mid, left_index});
  }

  bvh.prims_.reserve(prims.size());
  for (const BuildPrim& p : prims) {
    const TriangleMesh& mesh = meshes[p.mesh_index];
    Primitive prim;
    prim.v0 = mesh.positions[mesh.indices[3 * p.tri_index]];
    prim.v1 = mesh.positions[mesh.indices[3 * p.tri_index + 1]];
    prim.v2 = mesh.positions[mesh.indices[3 * p.tri_index + 2]];
    prim.mesh_index = p.mesh_index;
    prim.tri_index = p.tri_index;
    bvh.prims_.push_back(prim);
  }
  return bvh;
}

std::optional<SurfaceInteraction> Bvh::intersect(std::span<const TriangleMesh> meshes,
                                                 const Ray& ray) const {
  if (prims_.empty()) return std::nullopt;

  const Vec3 inv_dir{1.0f / ray.direction.x, 1.0f / ray.direction.y, 1.0f / ray.direction.z};
  const bool dir_neg[3] = {ray.direction.x < 0.0f, ray.direction.y < 0.0f,
                           ray.direction.z < 0.0f};

  Ray r = ray;
  int best_prim = -1;
  TriangleHit best_hit{};

  uint32_t stack[64];
  int sp = 0;
  stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    if (!node.bounds.hit(r.origin, inv_dir, r.t_min, r.t_max)) continue;
    if (node.count > 0) {
      for (uint32_t i = node.right_or_first; i < node.right_or_first + node.count; ++i) {
        const Primitive& p = prims_[i];
        if (auto hit = intersect_triangle(r, p.v0, p.v1, p.v2)) {
          r.t_max = hit->t;
          best_prim = static_cast<int>(i);
          best_hit = *hit;
        }
      }
    } else {
      // Children are allocated as a consecutive pair: left = right - 1.
      // Near child first.
      if (dir_neg[node.axis]) {
        stack[sp++] = node.right_or_first - 1;
        stack[sp++] = node.right_or_first;
      } else {
        stack[sp++] = node.right_or_first;
        stack[sp++] = node.right_or_first - 1;
      }
    }
  }

  if (best_prim < 0) return std::nullopt;

  const Primitive& p = prims_[best_prim];
  const TriangleMesh& mesh = meshes[p.mesh_index];
  const uint32_t i0 = mesh.indices[3 * p.tri_index];
  const uint32_t i1 = mesh.indices[3 * p.tri_index + 1];
  const uint32_t i2 = mesh.indices[3 * p.tri_index + 2];

  SurfaceInteraction si;
  si.t = best_hit.t;
  si.point = ray.at(best_hit.t);
  si.geometric_normal = normalize(cross(p.v1 - p.v0, p.v2 - p.v0));
  si.shading_normal = normalize(mesh.normals[i0] * best_hit.b0 + mesh.normals[i1] * best_hit.b1 +
                                mesh.normals[i2] * best_hit.b2);
  if (dot(si.geometric_normal, ray.direction) > 0.0f) {
    si.geometric_normal = -si.geometric_normal;
    si.shading_normal = -si.shading_normal;
  }
  if (dot(si.shading_normal, si.geometric_normal) <= 0.0f) si.shading_normal = si.geometric_normal;
  if (!mesh.uvs.empty()) {
    const Vec2 uv0 = mesh.uvs[i0], uv1 = mesh.uvs[i1], uv2 = mesh.uvs[i2];
    si.uv = {uv0.x * best_hit.b0 + uv1.x * best_hit.b1 + uv2.x * best_hit.b2,
             uv0.y * best_hit.b0 + uv1.y * best_hit.b1 + uv2.y * best_hit.b2};
  } else {
    si.uv = {best_hit.b1, best_hit.b2};
  }
  si.material_id = mesh.material_id;
  si.instance_id = mesh.instance_id;
  si.class_id = mesh.class_id;
  si.prim_index = static_cast<uint32_t>(best_prim);
  return si;
}

bool Bvh::occluded(const Ray& ray) const {
  if (prims_.empty()) return false;

  const Vec3 inv_dir{1.0f / ray.direction.x, 1.0f / ray.direction.y, 1.0f / ray.direction.z};
  uint32_t stack[64];
  int sp = 0;
  stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    if (!node.bounds.hit(ray.origin, inv_dir, ray.t_min, ray.t_max)) continue;
    if (node.count > 0) {
      for (uint32_t i = node.right_or_first; i < node.right_or_first + node.count; ++i) {
        const Primitive& p = prims_[i];
        if (intersect_triangle(ray, p.v0, p.v1, p.v2)) return true;
      }
    } else {
      stack[sp++] = node.right_or_first - 1;
      stack[sp++] = node.right_or_first;
    }
  }
  return false;
}

}  // namespace urbansynth
