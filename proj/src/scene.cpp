#include "urbansynth/scene.hpp"

#include <algorithm>
#include <stdexcept>

namespace urbansynth {

RenderScene RenderScene::build(SceneGraph graph) {
  for (const TriangleMesh& mesh : graph.meshes) {
    if (!mesh.valid_indices())
      throw std::logic_error("scene mesh has invalid indices or missing normals");
    if (!mesh.uvs.empty() && mesh.uvs.size() != mesh.positions.size())
      throw std::logic_error("scene mesh carries a partial uv array");
    if (mesh.material_id < 0 || mesh.material_id >= static_cast<int>(graph.materials.size()))
      throw std::logic_error("scene mesh references a missing material");
  }
  RenderScene scene;
  scene.graph_ = std::move(graph);
  scene.bvh_ = Bvh::build(scene.graph_.meshes);

  for (const TriangleMesh& mesh : scene.graph_.meshes) {
    const Material& mat = scene.graph_.materials[mesh.material_id];
    if (mat.kind != MaterialKind::emissive || mat.emission.is_black()) continue;
    for (size_t t = 0; t < mesh.triangle_count(); ++t) {
      EmitterTri e;
      e.v0 = mesh.positions[mesh.indices[3 * t]];
      e.v1 = mesh.positions[mesh.indices[3 * t + 1]];
      e.v2 = mesh.positions[mesh.indices[3 * t + 2]];
      const Vec3 c = cross(e.v1 - e.v0, e.v2 - e.v0);
      const float area = 0.5f * length(c);
      if (area <= 0.0f) continue;
      e.normal = c / (2.0f * area);
      e.emission = mat.emission;
      scene.total_emitter_area_ += area;
      e.cdf = scene.total_emitter_area_;
      scene.emitters_.push_back(e);
    }
  }
  for (EmitterTri& e : scene.emitters_) e.cdf /= scene.total_emitter_area_;
  return scene;
}

EmitterSample RenderScene::sample_emitter(float u_pick, const Vec2& u_point) const {
  const auto it = std::lower_bound(
      emitters_.begin(), emitters_.end(), u_pick,
      [](const EmitterTri& e, float u) { return e.cdf < u; });
  const EmitterTri& e = it == emitters_.end() ? emitters_.back() : *it;

  // Uniform barycentric point.
  const float su = std::sqrt(u_point.x);
  const float b0 = 1.0f - su;
  const float b1 = u_point.y * su;
  EmitterSample s;
  s.point = e.v0 * b0 + e.v1 * b1 + e.v2 * (1.0f - b0 - b1);
  s.normal = e.normal;
  s.emission = e.emission;
  return s;
}

}  // namespace urbansynth
