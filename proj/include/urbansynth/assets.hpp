#pragma once

#include <map>
#include <string>
#include <vector>

#include "urbansynth/geometry.hpp"
#include "urbansynth/material.hpp"

namespace urbansynth {

// One renderable piece of a prototype. A prototype may mix classes (a rider
// on a bicycle contributes both a rider part and a bicycle part).
struct PrototypePart {
  TriangleMesh mesh;  // authored at the origin, +x forward, z up, base at z=0
  Material material;
  ClassId class_id = ClassId::car;
  bool paintable = false;  // albedo replaced by the instance color
};

struct Prototype {
  std::string name;
  std::vector<PrototypePart> parts;

  Aabb bounds() const {
    Aabb b;
    for (const auto& p : parts) b.grow(p.mesh.bounds());
    return b;
  }
};

// Library groups, each with >= 2 variants. Group names double as the file
// name prefix in the on-disk mesh format (docs/mesh_format.md).
inline const std::vector<std::string>& asset_group_names() {
  static const std::vector<std::string> names = {
      "car",          "truck",      "bus",  "motorcycle", "pedestrian",
      "rider_bicycle", "traffic_sign", "traffic_light", "vegetation", "pole"};
  return names;
}

class AssetLibrary {
 public:
  // Prototypes constructed in code; the shipped assets/ directory holds this
  // library serialized in the documented mesh format.
  static AssetLibrary builtin();
  // Loads <group>_<variant>.usmesh files. Throws if a group is missing or
  // has fewer than two variants.
  static AssetLibrary load_directory(const std::string& dir);

  const std::vector<Prototype>& group(const std::string& name) const;
  int variant_count(const std::string& name) const;
  const Prototype& prototype(const std::string& name, int variant) const;

  const std::map<std::string, std::vector<Prototype>>& groups() const { return groups_; }

 private:
  std::map<std::string, std::vector<Prototype>> groups_;
};

// Mesh construction helpers shared by the builders and the procedural
// generators. Boxes are flat-shaded (vertices split per face).
void append_box(TriangleMesh& mesh, const Vec3& center, const Vec3& half_extent);
void append_quad(TriangleMesh& mesh, const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);
void append_cylinder(TriangleMesh& mesh, const Vec3& base_center, float radius, float height,
                     int segments);
void append_cone(TriangleMesh& mesh, const Vec3& base_center, float radius, float height,
                 int segments);
void append_icosphere(TriangleMesh& mesh, const Vec3& center, float radius, int subdivisions);

// Unit sphere mesh for tests (smooth normals).
TriangleMesh make_icosphere(const Vec3& center, float radius, int subdivisions);

}  // namespace urbansynth
