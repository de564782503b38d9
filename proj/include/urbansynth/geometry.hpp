#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "urbansynth/classes.hpp"
#include "urbansynth/vec.hpp"

namespace urbansynth {

constexpr float kRayInfinity = std::numeric_limits<float>::infinity();
// Shadow/continuation ray offset along the geometric normal (meters).
constexpr float kShadowEpsilon = 1e-4f;

struct Ray {
  Vec3 origin;
  Vec3 direction;  // unit length
  float t_min = kShadowEpsilon;
  float t_max = kRayInfinity;
  float time = 0.0f;  // normalized shutter position in [0, 1]

  Vec3 at(float t) const { return origin + direction * t; }
};

struct Aabb {
  Vec3 lo{kRayInfinity, kRayInfinity, kRayInfinity};
  Vec3 hi{-kRayInfinity, -kRayInfinity, -kRayInfinity};

  bool empty() const { return lo.x > hi.x; }
  Vec3 extent() const { return hi - lo; }
  Vec3 centroid() const { return (lo + hi) * 0.5f; }

  void grow(const Vec3& p) {
    lo = min(lo, p);
    hi = max(hi, p);
  }
  void grow(const Aabb& b) {
    lo = min(lo, b.lo);
    hi = max(hi, b.hi);
  }
  bool contains(const Aabb& b) const {
    return lo.x <= b.lo.x && lo.y <= b.lo.y && lo.z <= b.lo.z && hi.x >= b.hi.x &&
           hi.y >= b.hi.y && hi.z >= b.hi.z;
  }
  bool contains(const Vec3& p) const {
    return lo.x <= p.x && lo.y <= p.y && lo.z <= p.z && hi.x >= p.x && hi.y >= p.y && hi.z >= p.z;
  }
  bool overlaps(const Aabb& b) const {
    return lo.x <= b.hi.x && hi.x >= b.lo.x && lo.y <= b.hi.y && hi.y >= b.lo.y &&
           lo.z <= b.hi.z && hi.z >= b.lo.z;
  }

  float surface_area() const {
    if (empty()) return 0.0f;
    const Vec3 e = extent();
    return 2.0f * (e.x * e.y + e.y * e.z + e.z * e.x);
  }

  // Slab test against a ray with precomputed inverse direction.
  bool hit(const Vec3& origin, const Vec3& inv_dir, float t_min, float t_max) const {
    float t0 = (lo.x - origin.x) * inv_dir.x;
    float t1 = (hi.x - origin.x) * inv_dir.x;
    if (inv_dir.x < 0.0f) std::swap(t0, t1);
    float tn = t0 > t_min ? t0 : t_min;
    float tf = t1 < t_max ? t1 : t_max;

    t0 = (lo.y - origin.y) * inv_dir.y;
    t1 = (hi.y - origin.y) * inv_dir.y;
    if (inv_dir.y < 0.0f) std::swap(t0, t1);
    tn = t0 > tn ? t0 : tn;
    tf = t1 < tf ? t1 : tf;

    t0 = (lo.z - origin.z) * inv_dir.z;
    t1 = (hi.z - origin.z) * inv_dir.z;
    if (inv_dir.z < 0.0f) std::swap(t0, t1);
    tn = t0 > tn ? t0 : tn;
    tf = t1 < tf ? t1 : tf;

    return tn <= tf;
  }
};

// Indexed triangle mesh. Vertex normals drive shading; the winding order
// defines the geometric normal.
struct TriangleMesh {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;             // unit, one per vertex
  std::vector<Vec2> uvs;                 // optional; empty means derived from barycentrics
  std::vector<uint32_t> indices;         // triples
  int material_id = 0;
  uint32_t instance_id = 0;              // instance map code
  ClassId class_id = ClassId::building;

  size_t triangle_count() const { return indices.size() / 3; }
  Aabb bounds() const {
    Aabb b;
    for (const Vec3& p : positions) b.grow(p);
    return b;
  }
  Aabb triangle_bounds(size_t tri) const {
    Aabb b;
    b.grow(positions[indices[3 * tri]]);
    b.grow(positions[indices[3 * tri + 1]]);
    b.grow(positions[indices[3 * tri + 2]]);
    return b;
  }
  // True if every index triple references a valid vertex.
  bool valid_indices() const {
    for (uint32_t i : indices)
      if (i >= positions.size()) return false;
    return indices.size() % 3 == 0 && normals.size() == positions.size();
  }
};

struct SurfaceInteraction {
  float t = 0.0f;
  Vec3 point;
  Vec3 shading_normal;    // interpolated from vertex normals
  Vec3 geometric_normal;  // from the triangle plane, faces the incoming ray
  int material_id = 0;
  uint32_t instance_id = 0;
  ClassId class_id = ClassId::building;
  Vec2 uv;
  uint32_t prim_index = 0;  // global primitive index in the scene BVH
};

struct TriangleHit {
  float t;
  float b0, b1, b2;  // barycentrics, sum to 1
};

// Watertight ray/triangle intersection (Woop et al. style: axis permutation,
// shear, signed edge functions). Degenerate triangles return no hit.
std::optional<TriangleHit> intersect_triangle(const Ray& ray, const Vec3& v0, const Vec3& v1,
                                              const Vec3& v2);

}  // namespace urbansynth
