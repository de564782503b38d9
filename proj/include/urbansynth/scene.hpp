#pragma once

#include <vector>

#include "urbansynth/bvh.hpp"
#include "urbansynth/camera.hpp"
#include "urbansynth/geometry.hpp"
#include "urbansynth/material.hpp"
#include "urbansynth/sky.hpp"

namespace urbansynth {

// A realized world: flattened meshes (instancing already baked), material
// table, sun/sky, and the camera the world was realized for. Immutable once
// built; shared read-only across render workers.
struct SceneGraph {
  std::vector<Material> materials;
  std::vector<TriangleMesh> meshes;
  SunSky sky;
  Camera camera;

  int add_material(const Material& m) {
    materials.push_back(m);
    return static_cast<int>(materials.size()) - 1;
  }
};

struct EmitterSample {
  Vec3 point;
  Vec3 normal;  // geometric, unit; emitters are two-sided
  Spectrum emission;
};

// Scene prepared for ray queries: BVH plus an area-weighted emitter table.
class RenderScene {
 public:
  static RenderScene build(SceneGraph graph);

  const SceneGraph& graph() const { return graph_; }
  const SunSky& sky() const { return graph_.sky; }
  const Material& material(int id) const { return graph_.materials[id]; }

  std::optional<SurfaceInteraction> intersect(const Ray& ray) const {
    return bvh_.intersect(graph_.meshes, ray);
  }
  bool occluded(const Ray& ray) const { return bvh_.occluded(ray); }

  // Material with the procedural texture resolved at the hit point.
  Material shading_material(const SurfaceInteraction& si) const {
    Material m = graph_.materials[si.material_id];
    if (m.texture.kind != TextureKind::none) {
      m.albedo = textured_albedo(m, si.uv);
      m.texture.kind = TextureKind::none;
    }
    return m;
  }

  bool has_emitters() const { return !emitters_.empty(); }
  float emitter_area() const { return total_emitter_area_; }
  // Area-weighted triangle pick + uniform point on it. The solid-angle pdf of
  // the resulting direction from a shading point x is
  // dist^2 / (|cos theta_light| * emitter_area()).
  EmitterSample sample_emitter(float u_pick, const Vec2& u_point) const;

  const Bvh& bvh() const { return bvh_; }

 private:
  struct EmitterTri {
    Vec3 v0, v1, v2;
    Vec3 normal;
    Spectrum emission;
    float cdf;  // cumulative area fraction
  };

  SceneGraph graph_;
  Bvh bvh_;
  std::vector<EmitterTri> emitters_;
  float total_emitter_area_ = 0.0f;
};

}  // namespace urbansynth
