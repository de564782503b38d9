#pragma once

#include <utility>

#include "urbansynth/scene.hpp"
#include "urbansynth/worldgen.hpp"

namespace urbansynth {

// Instantiates the sampled world into a renderable scene, keeping only
// geometry whose bounds intersect the camera frustum dilated by the
// shadow/reflection relevance margin. Deterministic in (spec, camera).
SceneGraph realize_world(const WorldSpec& spec, const Camera& camera, const AssetLibrary& library);

// Procedural surface geometry. Class ids and uv coordinates (meters) are
// set; material ids are assigned by realize_world.
TriangleMesh generate_road(const WorldSpec& spec);
// Lane separators, edge lines and crosswalk stripes, slightly above the
// road surface. Lane boundaries sit at y = -width/2 + j * lane_width.
TriangleMesh generate_road_markings(const WorldSpec& spec);
TriangleMesh generate_sidewalk(const WorldSpec& spec);
TriangleMesh generate_terrain(const WorldSpec& spec);

struct BuildingMeshes {
  TriangleMesh walls;
  TriangleMesh glass;
};
BuildingMeshes generate_building(const WorldSpec& spec, const BuildingSpec& lot);

// Window grid of the front facade, (columns, rows). Closed form:
//   cols = floor((width - 2*1.0 + 0.6) / (window_width + 0.6))
//   rows = floor((height - 1.2 - 0.5 - window_height) / 3.0) + 1  (0 if negative)
std::pair<int, int> building_window_grid(const BuildingSpec& lot);

// Dilation added around the frustum: max(50 m, horizontal shadow projection
// of a 30 m occluder at the sun elevation, capped at 2 km). The fixed 20 m
// reflection radius is below the 50 m floor.
float relevance_margin(const SunSky& sky);

// Conservative test against the dilated frusta of the shutter-start and
// shutter-end poses (kept if either passes).
bool aabb_relevant(const Aabb& box, const Camera& camera, float margin);

}  // namespace urbansynth
