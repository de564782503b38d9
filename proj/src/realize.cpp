#include "urbansynth/realize.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace urbansynth {

namespace {

constexpr float kMarkingLift = 0.002f;
constexpr float kCrosswalkLift = 0.003f;

// Facade grid constants (see building_window_grid).
constexpr float kFacadeMargin = 1.0f;
constexpr float kWindowGap = 0.6f;
constexpr float kSillHeight = 1.2f;
constexpr float kFloorPitch = 3.0f;
constexpr float kTopMargin = 0.5f;

// Keeps the uv array in lockstep with the positions; meshes must carry
// either no uvs or one per vertex.
void add_rect(TriangleMesh& mesh, const Vec3& origin, const Vec3& edge_u, const Vec3& edge_v) {
  append_quad(mesh, origin, origin + edge_u, origin + edge_u + edge_v, origin + edge_v);
  if (!mesh.uvs.empty()) {
    while (mesh.uvs.size() < mesh.positions.size()) {
      const Vec3& p = mesh.positions[mesh.uvs.size()];
      mesh.uvs.push_back({p.x, p.y});
    }
  }
}

// Horizontal rectangle [x0,x1]x[y0,y1] at height z, facing +z, uv = (x, y).
void add_ground_rect(TriangleMesh& mesh, float x0, float x1, float y0, float y1, float z) {
  while (mesh.uvs.size() < mesh.positions.size()) {
    const Vec3& p = mesh.positions[mesh.uvs.size()];
    mesh.uvs.push_back({p.x, p.y});
  }
  const uint32_t base = static_cast<uint32_t>(mesh.positions.size());
  const Vec3 n{0, 0, 1};
  mesh.positions.insert(mesh.positions.end(),
                        {{x0, y0, z}, {x1, y0, z}, {x1, y1, z}, {x0, y1, z}});
  mesh.normals.insert(mesh.normals.end(), {n, n, n, n});
  mesh.uvs.insert(mesh.uvs.end(), {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
  mesh.indices.insert(mesh.indices.end(), {base, base + 1, base + 2, base, base + 2, base + 3});
}

Spectrum road_albedo(const std::string& name) {
  if (name == "asphalt_dark") return {0.045f, 0.045f, 0.048f};
  if (name == "asphalt_light") return {0.085f, 0.085f, 0.088f};
  if (name == "concrete") return {0.18f, 0.18f, 0.19f};
  throw std::invalid_argument("unknown road material: " + name);
}

Spectrum sidewalk_albedo(const std::string& name) {
  if (name == "concrete") return {0.28f, 0.28f, 0.28f};
  if (name == "pavers") return {0.27f, 0.22f, 0.20f};
  throw std::invalid_argument("unknown sidewalk material: " + name);
}

Spectrum building_albedo(const std::string& name) {
  if (name == "plaster_white") return {0.55f, 0.52f, 0.48f};
  if (name == "plaster_beige") return {0.52f, 0.45f, 0.35f};
  if (name == "brick_red") return {0.30f, 0.16f, 0.12f};
  if (name == "concrete_panel") return {0.32f, 0.32f, 0.33f};
  throw std::invalid_argument("unknown building material: " + name);
}

}  // namespace

TriangleMesh generate_road(const WorldSpec& spec) {
  TriangleMesh mesh;
  mesh.class_id = ClassId::road;
  const float h = spec.road_width * 0.5f;
  add_ground_rect(mesh, kStreetXMin, kStreetXMax, -h, h, 0.0f);
  return mesh;
}

TriangleMesh generate_road_markings(const WorldSpec& spec) {
  TriangleMesh mesh;
  mesh.class_id = ClassId::road;
  const float h = spec.road_width * 0.5f;
  const float lane_w = spec.lane_width();

  // Dashed separators between lanes: 3 m dash, 2 m gap, 0.12 m wide.
  for (int j = 1; j < spec.lane_count; ++j) {
    const float y = -h + j * lane_w;
    for (float x = kStreetXMin; x < kStreetXMax; x += 5.0f) {
      const float x1 = std::fmin(x + 3.0f, kStreetXMax);
      add_ground_rect(mesh, x, x1, y - 0.06f, y + 0.06f, kMarkingLift);
    }
  }
  // Solid edge lines 0.3 m in from the road edge.
  for (float side : {-1.0f, 1.0f}) {
    const float y = side * (h - 0.3f);
    add_ground_rect(mesh, kStreetXMin, kStreetXMax, y - 0.06f, y + 0.06f, kMarkingLift);
  }
  // Crosswalk stripes: 0.5 m bars with 0.6 m gaps across the carriageway.
  if (spec.has_crosswalk) {
    for (int k = 0; k < 3; ++k) {
      const float x0 = spec.crosswalk_x - 1.5f + k * 1.1f;
      add_ground_rect(mesh, x0, x0 + 0.5f, -h + 0.3f, h - 0.3f, kCrosswalkLift);
    }
  }
  return mesh;
}

TriangleMesh generate_sidewalk(const WorldSpec& spec) {
  TriangleMesh mesh;
  mesh.class_id = ClassId::sidewalk;
  const float h = spec.road_width * 0.5f;
  const float top = spec.curb_height;

  for (float side : {-1.0f, 1.0f}) {
    const float y_in = side * h;
    const float y_out = side * (h + spec.sidewalk_width);
    // Walking surface.
    add_ground_rect(mesh, kStreetXMin, kStreetXMax, std::fmin(y_in, y_out),
                    std::fmax(y_in, y_out), top);
    // Curb face toward the road (skipped when the curb is flush).
    if (top > 0.0f) {
      const Vec3 origin{kStreetXMin, y_in, 0.0f};
      const Vec3 along{kStreetXMax - kStreetXMin, 0, 0};
      const Vec3 up{0, 0, top};
      if (side > 0)
        add_rect(mesh, origin, along, up);  // normal -y, toward road center
      else
        add_rect(mesh, origin + up, along, up * -1.0f);  // normal +y
    }
    // Outer face dropping to terrain level.
    {
      const float drop = top - kTerrainLevel;
      const Vec3 origin{kStreetXMin, y_out, kTerrainLevel};
      const Vec3 along{kStreetXMax - kStreetXMin, 0, 0};
      const Vec3 up{0, 0, drop};
      if (side > 0)
        add_rect(mesh, origin + up, along, up * -1.0f);  // normal +y, away from road
      else
        add_rect(mesh, origin, along, up);  // normal -y
    }
  }
  return mesh;
}

TriangleMesh generate_terrain(const WorldSpec& spec) {
  (void)spec;
  TriangleMesh mesh;
  mesh.class_id = ClassId::terrain;
  add_ground_rect(mesh, -kSceneFarPlane, kSceneFarPlane, -kSceneFarPlane, kSceneFarPlane,
                  kTerrainLevel);
  return mesh;
}

std::pair<int, int> building_window_grid(const BuildingSpec& lot) {
  const int cols = static_cast<int>(
      std::floor((lot.width - 2.0f * kFacadeMargin + kWindowGap) / (lot.window_width + kWindowGap)));
  const int rows = static_cast<int>(std::floor(
                       (lot.height - kSillHeight - kTopMargin - lot.window_height) / kFloorPitch)) +
                   1;
  return {std::max(cols, 0), std::max(rows, 0)};
}

BuildingMeshes generate_building(const WorldSpec& spec, const BuildingSpec& lot) {
  BuildingMeshes out;
  out.walls.class_id = ClassId::building;
  out.glass.class_id = ClassId::building;

  const float side = static_cast<float>(lot.side);
  const float yf = side * (spec.road_width * 0.5f + spec.sidewalk_width + kVergeWidth);
  const float yb = yf + side * lot.depth;
  const float x0 = lot.x0;
  const float x1 = lot.x0 + lot.width;

  // Front facade rectangle emitter: u along x from x0, v along z; outward
  // normal faces the road (-side * y).
  auto facade_rect = [&](TriangleMesh& mesh, float u0, float u1, float v0, float v1, float y) {
    if (u1 <= u0 || v1 <= v0) return;
    if (side > 0)
      add_rect(mesh, {x0 + u0, y, v0}, {u1 - u0, 0, 0}, {0, 0, v1 - v0});  // normal -y
    else
      add_rect(mesh, {x0 + u0, y, v1}, {u1 - u0, 0, 0}, {0, 0, v0 - v1});  // normal +y
  };

  const auto [cols, rows] = building_window_grid(lot);
  if (cols == 0 || rows == 0) {
    facade_rect(out.walls, 0, lot.width, 0, lot.height, yf);
  } else {
    const float total_w = cols * lot.window_width + (cols - 1) * kWindowGap;
    const float u_start = (lot.width - total_w) * 0.5f;
    const float wd = std::fmin(lot.window_depth, lot.depth * 0.5f);

    // Horizontal wall bands.
    facade_rect(out.walls, 0, lot.width, 0, kSillHeight, yf);
    for (int r = 0; r < rows; ++r) {
      const float band_lo = kSillHeight + r * kFloorPitch + lot.window_height;
      const float band_hi = r + 1 < rows ? kSillHeight + (r + 1) * kFloorPitch : lot.height;
      facade_rect(out.walls, 0, lot.width, band_lo, band_hi, yf);
    }
    for (int r = 0; r < rows; ++r) {
      const float v0 = kSillHeight + r * kFloorPitch;
      const float v1 = v0 + lot.window_height;
      // Wall strips between windows in this row.
      facade_rect(out.walls, 0, u_start, v0, v1, yf);
      for (int c = 0; c < cols - 1; ++c) {
        const float gap0 = u_start + c * (lot.window_width + kWindowGap) + lot.window_width;
        facade_rect(out.walls, gap0, gap0 + kWindowGap, v0, v1, yf);
      }
      facade_rect(out.walls, u_start + total_w, lot.width, v0, v1, yf);
      // Window cells: reveal faces plus recessed glass.
      for (int c = 0; c < cols; ++c) {
        const float u0 = u_start + c * (lot.window_width + kWindowGap);
        const float u1 = u0 + lot.window_width;
        const float yg = yf + side * wd;
        const Vec3 recess{0, yg - yf, 0};
        // Left and right reveals (normals point into the opening).
        add_rect(out.walls, {x0 + u0, yf, v0},
                 side > 0 ? recess : Vec3{0, 0, v1 - v0},
                 side > 0 ? Vec3{0, 0, v1 - v0} : recess);
        add_rect(out.walls, {x0 + u1, yf, v0},
                 side > 0 ? Vec3{0, 0, v1 - v0} : recess,
                 side > 0 ? recess : Vec3{0, 0, v1 - v0});
        // Top and bottom reveals.
        add_rect(out.walls, {x0 + u0, yf, v0}, side > 0 ? Vec3{u1 - u0, 0, 0} : recess,
                 side > 0 ? recess : Vec3{u1 - u0, 0, 0});
        add_rect(out.walls, {x0 + u0, yf, v1}, side > 0 ? recess : Vec3{u1 - u0, 0, 0},
                 side > 0 ? Vec3{u1 - u0, 0, 0} : recess);
        // Glass pane.
        facade_rect(out.glass, u0, u1, v0, v1, yg);
      }
    }
  }

  // Remaining box faces: back, sides, roof.
  const float y_lo = std::fmin(yf, yb), y_hi = std::fmax(yf, yb);
  if (side > 0)
    add_rect(out.walls, {x0, yb, 0}, {0, 0, lot.height}, {x1 - x0, 0, 0});  // back: normal +y
  else
    add_rect(out.walls, {x0, yb, 0}, {x1 - x0, 0, 0}, {0, 0, lot.height});  // back: normal -y
  add_rect(out.walls, {x0, y_lo, 0}, {0, y_hi - y_lo, 0}, {0, 0, lot.height});  // -x side
  add_rect(out.walls, {x1, y_lo, lot.height}, {0, y_hi - y_lo, 0}, {0, 0, -lot.height});  // +x
  add_rect(out.walls, {x0, y_lo, lot.height}, {x1 - x0, 0, 0}, {0, y_hi - y_lo, 0});  // roof
  return out;
}

float relevance_margin(const SunSky& sky) {
  const float elev = std::fmax(radians(sky.sun_latitude_deg), 0.015f);
  const float shadow = std::fmin(30.0f / std::tan(elev), 2000.0f);
  return std::fmax(50.0f, shadow);
}

bool aabb_relevant(const Aabb& box, const Camera& camera, float margin) {
  const float tan_y = std::tan(0.5f * radians(camera.vertical_fov_deg));
  const float tan_x = tan_y * static_cast<float>(camera.width) / camera.height;

  for (const RigidTransform* pose : {&camera.pose, &camera.pose_at_shutter_end}) {
    const Vec3 eye = pose->translation;
    const Vec3 right = pose->rotation.column(0);
    const Vec3 up = pose->rotation.column(1);
    const Vec3 fwd = pose->forward();

    const std::array<Vec3, 5> normals = {
        normalize(right + fwd * tan_x), normalize(right * -1.0f + fwd * tan_x),
        normalize(up + fwd * tan_y),    normalize(up * -1.0f + fwd * tan_y),
        fwd,
    };
    auto max_dist = [&](const Vec3& n) {
      // Corner maximizing n . (corner - eye).
      const Vec3 corner{n.x > 0 ? box.hi.x : box.lo.x, n.y > 0 ? box.hi.y : box.lo.y,
                        n.z > 0 ? box.hi.z : box.lo.z};
      return dot(n, corner - eye);
    };

    bool inside = true;
    for (const Vec3& n : normals) {
      if (max_dist(n) < -margin) {
        inside = false;
        break;
      }
    }
    if (inside && max_dist(fwd * -1.0f) < -(kSceneFarPlane + margin)) inside = false;
    if (inside) return true;
  }
  return false;
}

namespace {

TriangleMesh transform_mesh(const TriangleMesh& src, float yaw, const Vec3& translation) {
  TriangleMesh out = src;
  const Mat3 rot = Mat3::rotation_z(yaw);
  for (Vec3& p : out.positions) p = rot * p + translation;
  for (Vec3& n : out.normals) n = rot * n;
  return out;
}

}  // namespace

SceneGraph realize_world(const WorldSpec& spec, const Camera& camera,
                         const AssetLibrary& library) {
  SceneGraph g;
  g.sky = spec.sky;
  g.camera = camera;

  Material road_mat = Material::make_lambertian(road_albedo(spec.road_material));
  road_mat.texture = {TextureKind::asphalt, spec.crack_density, spec.repair_density, 0.0f, 0.5f,
                      static_cast<uint32_t>(spec.master_seed)};
  const int road_id = g.add_material(road_mat);

  const int marking_id = g.add_material(Material::make_lambertian({0.62f, 0.62f, 0.60f}));

  Material sidewalk_mat = Material::make_lambertian(sidewalk_albedo(spec.sidewalk_material));
  sidewalk_mat.texture = {TextureKind::pavement, 0.0f, 0.0f, spec.dirt_amount, 0.8f,
                          static_cast<uint32_t>(spec.master_seed) + 17u};
  const int sidewalk_id = g.add_material(sidewalk_mat);

  Material terrain_mat = Material::make_lambertian({0.10f, 0.15f, 0.06f});
  terrain_mat.texture = {TextureKind::pavement, 0.0f, 0.0f, 0.7f, 0.15f,
                         static_cast<uint32_t>(spec.master_seed) + 29u};
  const int terrain_id = g.add_material(terrain_mat);

  const int glass_id =
      g.add_material(Material::make_rough_specular({0.05f, 0.08f, 0.10f}, 0.12f));

  std::vector<TriangleMesh> meshes;

  auto add_structural = [&](TriangleMesh mesh, int material_id, ClassId cls) {
    mesh.material_id = material_id;
    mesh.class_id = cls;
    mesh.instance_id = instance_code(cls, 0);
    meshes.push_back(std::move(mesh));
  };
  add_structural(generate_road(spec), road_id, ClassId::road);
  add_structural(generate_road_markings(spec), marking_id, ClassId::road);
  add_structural(generate_sidewalk(spec), sidewalk_id, ClassId::sidewalk);
  add_structural(generate_terrain(spec), terrain_id, ClassId::terrain);

  for (const BuildingSpec& lot : spec.buildings) {
    BuildingMeshes bm = generate_building(spec, lot);
    const int wall_id = g.add_material(
        Material::make_lambertian(building_albedo(lot.material) * lot.albedo_scale));
    add_structural(std::move(bm.walls), wall_id, ClassId::building);
    add_structural(std::move(bm.glass), glass_id, ClassId::building);
  }

  // Library instances; countable classes get sequential instance indices in
  // placement order, assigned before culling so ids do not depend on the
  // camera.
  std::array<uint32_t, kClassCount> next_index{};
  for (const Placement& p : spec.placements) {
    const Prototype& proto = library.prototype(placement_group_name(p.category), p.variant);
    // One instance index per class present in the prototype.
    std::array<int, kClassCount> class_instance;
    class_instance.fill(-1);
    for (const PrototypePart& part : proto.parts) {
      const int cls = class_code(part.class_id);
      if (class_instance[cls] < 0) {
        class_instance[cls] =
            is_countable(part.class_id) ? static_cast<int>(next_index[cls]++) : 0;
      }
    }
    for (const PrototypePart& part : proto.parts) {
      TriangleMesh mesh = transform_mesh(part.mesh, p.yaw, p.position);
      Material mat = part.material;
      if (part.paintable && p.has_color) mat.albedo = p.color;
      mesh.material_id = g.add_material(mat);
      mesh.class_id = part.class_id;
      mesh.instance_id =
          instance_code(part.class_id, static_cast<uint32_t>(class_instance[class_code(part.class_id)]));
      meshes.push_back(std::move(mesh));
    }
  }

  const float margin = relevance_margin(spec.sky);
  for (TriangleMesh& mesh : meshes) {
    if (mesh.indices.empty()) continue;
    if (aabb_relevant(mesh.bounds(), camera, margin)) g.meshes.push_back(std::move(mesh));
  }
  return g;
}

}  // namespace urbansynth
