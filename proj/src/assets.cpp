#include "urbansynth/assets.hpp"

#include <cmath>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "urbansynth/mesh_io.hpp"

namespace urbansynth {

namespace {

void append_vertex(TriangleMesh& mesh, const Vec3& p, const Vec3& n) {
  mesh.positions.push_back(p);
  mesh.normals.push_back(n);
}

}  // namespace

void append_quad(TriangleMesh& mesh, const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 n = normalize(cross(b - a, c - a));
  const uint32_t base = static_cast<uint32_t>(mesh.positions.size());
  append_vertex(mesh, a, n);
  append_vertex(mesh, b, n);
  append_vertex(mesh, c, n);
  append_vertex(mesh, d, n);
  mesh.indices.insert(mesh.indices.end(), {base, base + 1, base + 2, base, base + 2, base + 3});
}

void append_box(TriangleMesh& mesh, const Vec3& center, const Vec3& half) {
  // (normal axis, sign, u axis, v axis) with (n, u, v) right-handed.
  static const int faces[6][4] = {{0, +1, 1, 2}, {0, -1, 2, 1}, {1, +1, 2, 0},
                                  {1, -1, 0, 2}, {2, +1, 0, 1}, {2, -1, 1, 0}};
  auto axis_vec = [](int a) { return Vec3(a == 0, a == 1, a == 2); };
  for (const auto& f : faces) {
    const Vec3 n = axis_vec(f[0]) * static_cast<float>(f[1]);
    const Vec3 u = axis_vec(f[2]);
    const Vec3 v = axis_vec(f[3]);
    const float hn = half[f[0]], hu = half[f[2]], hv = half[f[3]];
    const Vec3 fc = center + n * hn;
    append_quad(mesh, fc - u * hu - v * hv, fc + u * hu - v * hv, fc + u * hu + v * hv,
                fc - u * hu + v * hv);
  }
}

namespace {

// Cylinder with its axis along `axis` (0=x, 1=y, 2=z), spanning
// [-half_len, +half_len] around `center`. Side normals are smooth.
void append_cylinder_axis(TriangleMesh& mesh, const Vec3& center, int axis, float radius,
                          float half_len, int segments) {
  const int u_axis = (axis + 1) % 3;
  const int v_axis = (axis + 2) % 3;
  auto axis_vec = [](int a) { return Vec3(a == 0, a == 1, a == 2); };
  const Vec3 au = axis_vec(u_axis), av = axis_vec(v_axis), an = axis_vec(axis);

  const uint32_t base = static_cast<uint32_t>(mesh.positions.size());
  for (int i = 0; i < segments; ++i) {
    const float t = kTwoPi * i / segments;
    const Vec3 radial = au * std::cos(t) + av * std::sin(t);
    append_vertex(mesh, center + radial * radius - an * half_len, radial);
    append_vertex(mesh, center + radial * radius + an * half_len, radial);
  }
  for (int i = 0; i < segments; ++i) {
    const uint32_t a = base + 2 * i;
    const uint32_t b = base + 2 * ((i + 1) % segments);
    mesh.indices.insert(mesh.indices.end(), {a, b, b + 1, a, b + 1, a + 1});
  }
  // Caps, flat-shaded fans.
  for (int s = -1; s <= 1; s += 2) {
    const Vec3 n = an * static_cast<float>(s);
    const uint32_t cap = static_cast<uint32_t>(mesh.positions.size());
    append_vertex(mesh, center + n * half_len, n);
    for (int i = 0; i < segments; ++i) {
      const float t = kTwoPi * i / segments;
      append_vertex(mesh, center + (au * std::cos(t) + av * std::sin(t)) * radius + n * half_len,
                    n);
    }
    for (int i = 0; i < segments; ++i) {
      const uint32_t a = cap + 1 + i;
      const uint32_t b = cap + 1 + (i + 1) % segments;
      if (s > 0)
        mesh.indices.insert(mesh.indices.end(), {cap, a, b});
      else
        mesh.indices.insert(mesh.indices.end(), {cap, b, a});
    }
  }
}

}  // namespace

void append_cylinder(TriangleMesh& mesh, const Vec3& base_center, float radius, float height,
                     int segments) {
  append_cylinder_axis(mesh, base_center + Vec3(0, 0, height * 0.5f), 2, radius, height * 0.5f,
                       segments);
}

void append_cone(TriangleMesh& mesh, const Vec3& base_center, float radius, float height,
                 int segments) {
  const Vec3 apex = base_center + Vec3(0, 0, height);
  for (int i = 0; i < segments; ++i) {
    const float t0 = kTwoPi * i / segments;
    const float t1 = kTwoPi * (i + 1) / segments;
    const Vec3 p0 = base_center + Vec3(radius * std::cos(t0), radius * std::sin(t0), 0);
    const Vec3 p1 = base_center + Vec3(radius * std::cos(t1), radius * std::sin(t1), 0);
    const Vec3 n = normalize(cross(p1 - p0, apex - p0));
    const uint32_t base = static_cast<uint32_t>(mesh.positions.size());
    append_vertex(mesh, p0, n);
    append_vertex(mesh, p1, n);
    append_vertex(mesh, apex, n);
    mesh.indices.insert(mesh.indices.end(), {base, base + 1, base + 2});
  }
  // Base cap.
  const uint32_t cap = static_cast<uint32_t>(mesh.positions.size());
  const Vec3 down(0, 0, -1);
  append_vertex(mesh, base_center, down);
  for (int i = 0; i < segments; ++i) {
    const float t = kTwoPi * i / segments;
    append_vertex(mesh, base_center + Vec3(radius * std::cos(t), radius * std::sin(t), 0), down);
  }
  for (int i = 0; i < segments; ++i) {
    const uint32_t a = cap + 1 + i;
    const uint32_t b = cap + 1 + (i + 1) % segments;
    mesh.indices.insert(mesh.indices.end(), {cap, b, a});
  }
}

void append_icosphere(TriangleMesh& mesh, const Vec3& center, float radius, int subdivisions) {
  const float phi = (1.0f + std::sqrt(5.0f)) * 0.5f;
  std::vector<Vec3> verts = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0}, {0, -1, phi},  {0, 1, phi},
      {0, -1, -phi}, {0, 1, -phi}, {phi, 0, -1},  {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vec3& v : verts) v = normalize(v);
  std::vector<std::array<uint32_t, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

  std::map<uint64_t, uint32_t> midpoint_cache;
  auto midpoint = [&](uint32_t a, uint32_t b) {
    const uint64_t key = a < b ? (static_cast<uint64_t>(a) << 32) | b
                               : (static_cast<uint64_t>(b) << 32) | a;
    auto it = midpoint_cache.find(key);
    if (it != midpoint_cache.end()) return it->second;
    const uint32_t idx = static_cast<uint32_t>(verts.size());
    verts.push_back(normalize((verts[a] + verts[b]) * 0.5f));
    midpoint_cache.emplace(key, idx);
    return idx;
  };

  for (int s = 0; s < subdivisions; ++s) {
    std::vector<std::array<uint32_t, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const uint32_t ab = midpoint(f[0], f[1]);
      const uint32_t bc = midpoint(f[1], f[2]);
      const uint32_t ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  const uint32_t base = static_cast<uint32_t>(mesh.positions.size());
  for (const Vec3& v : verts) append_vertex(mesh, center + v * radius, v);
  for (const auto& f : faces)
    mesh.indices.insert(mesh.indices.end(), {base + f[0], base + f[1], base + f[2]});
}

TriangleMesh make_icosphere(const Vec3& center, float radius, int subdivisions) {
  TriangleMesh mesh;
  append_icosphere(mesh, center, radius, subdivisions);
  return mesh;
}

namespace {

PrototypePart make_part(TriangleMesh mesh, const Material& material, ClassId cls,
                        bool paintable = false) {
  PrototypePart part;
  part.mesh = std::move(mesh);
  part.material = material;
  part.class_id = cls;
  part.paintable = paintable;
  return part;
}

const Material kTire = Material::make_lambertian({0.03f, 0.03f, 0.03f});
const Material kDarkMetal = Material::make_rough_specular({0.08f, 0.08f, 0.09f}, 0.4f);
const Material kGalvanized = Material::make_rough_specular({0.32f, 0.33f, 0.35f}, 0.45f);
const Material kGlassDark = Material::make_rough_specular({0.04f, 0.05f, 0.06f}, 0.08f);
const Material kSkin = Material::make_lambertian({0.55f, 0.40f, 0.30f});
const Material kTrousers = Material::make_lambertian({0.12f, 0.12f, 0.16f});
const Material kTrunk = Material::make_lambertian({0.18f, 0.12f, 0.07f});

void add_wheels(Prototype& proto, ClassId cls, float x_front, float x_rear, float y, float radius,
                float width) {
  TriangleMesh wheels;
  for (float x : {x_front, x_rear}) {
    for (float side : {-1.0f, 1.0f}) {
      append_cylinder_axis(wheels, {x, side * y, radius}, 1, radius, width * 0.5f, 10);
    }
  }
  proto.parts.push_back(make_part(std::move(wheels), kTire, cls));
}

Prototype build_car(int variant) {
  Prototype p;
  p.name = variant == 0 ? "car_sedan" : "car_hatchback";
  const float len = variant == 0 ? 4.5f : 3.9f;
  const float width = 1.78f;
  const float body_top = variant == 0 ? 0.95f : 1.0f;

  TriangleMesh body;
  append_box(body, {0, 0, (0.30f + body_top) * 0.5f}, {len * 0.5f, width * 0.5f,
                                                       (body_top - 0.30f) * 0.5f});
  p.parts.push_back(
      make_part(std::move(body), Material::make_rough_specular({0.5f, 0.5f, 0.5f}, 0.25f),
                ClassId::car, true));

  TriangleMesh cabin;
  const float cabin_len = variant == 0 ? 2.1f : 2.3f;
  const float cabin_x = variant == 0 ? -0.35f : -0.55f;
  append_box(cabin, {cabin_x, 0, body_top + 0.28f}, {cabin_len * 0.5f, width * 0.45f, 0.28f});
  p.parts.push_back(make_part(std::move(cabin), kGlassDark, ClassId::car));

  add_wheels(p, ClassId::car, len * 0.32f, -len * 0.32f, width * 0.5f - 0.08f, 0.32f, 0.22f);
  return p;
}

Prototype build_truck(int variant) {
  Prototype p;
  p.name = variant == 0 ? "truck_box" : "truck_flat";

  TriangleMesh cab;
  append_box(cab, {2.6f, 0, 1.5f}, {1.1f, 1.15f, 1.1f});
  p.parts.push_back(make_part(std::move(cab),
                              Material::make_rough_specular({0.5f, 0.5f, 0.5f}, 0.3f),
                              ClassId::truck, true));

  TriangleMesh cargo;
  if (variant == 0) {
    append_box(cargo, {-1.2f, 0, 1.9f}, {2.6f, 1.25f, 1.45f});
  } else {
    append_box(cargo, {-1.2f, 0, 1.0f}, {2.6f, 1.25f, 0.35f});
    append_box(cargo, {-1.2f, 0, 1.8f}, {2.4f, 1.1f, 0.5f});
  }
  p.parts.push_back(make_part(std::move(cargo),
                              Material::make_lambertian({0.72f, 0.72f, 0.70f}), ClassId::truck));

  add_wheels(p, ClassId::truck, 2.6f, -2.0f, 1.05f, 0.45f, 0.3f);
  return p;
}

Prototype build_bus(int variant) {
  Prototype p;
  p.name = variant == 0 ? "bus_city" : "bus_coach";
  const float len = variant == 0 ? 11.0f : 12.5f;
  const float height = variant == 0 ? 3.0f : 3.4f;

  TriangleMesh body;
  append_box(body, {0, 0, (0.35f + height) * 0.5f}, {len * 0.5f, 1.25f, (height - 0.35f) * 0.5f});
  p.parts.push_back(make_part(std::move(body),
                              Material::make_rough_specular({0.5f, 0.5f, 0.5f}, 0.3f),
                              ClassId::bus, true));

  TriangleMesh windows;
  for (float side : {-1.0f, 1.0f})
    append_box(windows, {0.2f, side * 1.26f, height * 0.68f}, {len * 0.42f, 0.01f, 0.45f});
  p.parts.push_back(make_part(std::move(windows), kGlassDark, ClassId::bus));

  add_wheels(p, ClassId::bus, len * 0.33f, -len * 0.33f, 1.1f, 0.5f, 0.32f);
  return p;
}

Prototype build_motorcycle(int variant) {
  Prototype p;
  p.name = variant == 0 ? "motorcycle_street" : "motorcycle_scooter";

  TriangleMesh frame;
  append_box(frame, {0, 0, 0.72f}, {0.75f, 0.14f, 0.22f});  // tank + seat block
  append_box(frame, {0.55f, 0, 1.0f}, {0.06f, 0.3f, 0.06f});  // handlebar
  if (variant == 1) append_box(frame, {0.2f, 0, 0.45f}, {0.5f, 0.2f, 0.12f});  // footboard
  p.parts.push_back(make_part(std::move(frame),
                              Material::make_rough_specular({0.4f, 0.1f, 0.1f}, 0.3f),
                              ClassId::motorcycle, true));

  TriangleMesh wheels;
  const float r = variant == 0 ? 0.32f : 0.26f;
  append_cylinder_axis(wheels, {0.75f, 0, r}, 1, r, 0.05f, 10);
  append_cylinder_axis(wheels, {-0.75f, 0, r}, 1, r, 0.05f, 10);
  p.parts.push_back(make_part(std::move(wheels), kTire, ClassId::motorcycle));
  return p;
}

void add_person_parts(Prototype& p, ClassId cls, float height, float lean_x, float leg_bend) {
  const float leg_h = height * 0.48f;
  const float torso_h = height * 0.34f;
  const float head_r = height * 0.075f;

  TriangleMesh legs;
  append_box(legs, {lean_x * 0.2f + leg_bend, -0.09f * height / 1.75f, leg_h * 0.5f},
             {0.07f, 0.06f, leg_h * 0.5f});
  append_box(legs, {lean_x * 0.2f - leg_bend, 0.09f * height / 1.75f, leg_h * 0.5f},
             {0.07f, 0.06f, leg_h * 0.5f});
  p.parts.push_back(make_part(std::move(legs), kTrousers, cls));

  TriangleMesh torso;
  append_box(torso, {lean_x * 0.6f, 0, leg_h + torso_h * 0.5f},
             {0.11f, 0.16f * height / 1.75f, torso_h * 0.5f});
  // Arms.
  for (float side : {-1.0f, 1.0f})
    append_box(torso, {lean_x * 0.6f, side * (0.16f * height / 1.75f + 0.05f),
                       leg_h + torso_h * 0.55f},
               {0.05f, 0.045f, torso_h * 0.45f});
  p.parts.push_back(
      make_part(std::move(torso), Material::make_lambertian({0.3f, 0.3f, 0.5f}), cls, true));

  TriangleMesh head;
  append_icosphere(head, {lean_x * 0.8f, 0, leg_h + torso_h + head_r * 1.15f}, head_r, 1);
  p.parts.push_back(make_part(std::move(head), kSkin, cls));
}

Prototype build_pedestrian(int variant) {
  Prototype p;
  p.name = variant == 0 ? "pedestrian_adult" : "pedestrian_small";
  const float height = variant == 0 ? 1.78f : 1.45f;
  const float stride = variant == 0 ? 0.12f : 0.0f;
  add_person_parts(p, ClassId::person, height, 0.0f, stride);
  return p;
}

Prototype build_rider_bicycle(int variant) {
  Prototype p;
  p.name = variant == 0 ? "rider_bicycle_city" : "rider_bicycle_sport";

  // Bicycle.
  TriangleMesh bike;
  const float wheel_r = 0.34f;
  append_cylinder_axis(bike, {0.52f, 0, wheel_r}, 1, wheel_r, 0.02f, 12);
  append_cylinder_axis(bike, {-0.52f, 0, wheel_r}, 1, wheel_r, 0.02f, 12);
  append_box(bike, {0.0f, 0, 0.62f}, {0.5f, 0.02f, 0.04f});   // top tube
  append_box(bike, {0.5f, 0, 0.78f}, {0.03f, 0.22f, 0.03f});  // handlebar
  append_box(bike, {-0.42f, 0, 0.82f}, {0.08f, 0.05f, 0.03f});  // saddle
  p.parts.push_back(make_part(std::move(bike), variant == 0 ? kDarkMetal
                                                            : Material::make_rough_specular(
                                                                  {0.35f, 0.08f, 0.08f}, 0.3f),
                              ClassId::bicycle));

  // Rider, seated: shifted up and leaning forward.
  Prototype rider;
  add_person_parts(rider, ClassId::rider, variant == 0 ? 1.7f : 1.8f, 0.25f, 0.08f);
  for (auto& part : rider.parts) {
    for (Vec3& pos : part.mesh.positions) {
      pos.z *= 0.62f;       // legs bent onto the pedals
      pos.z += 0.55f;
      pos.x -= 0.15f;
    }
    p.parts.push_back(std::move(part));
  }
  return p;
}

Prototype build_traffic_sign(int variant) {
  Prototype p;
  p.name = variant == 0 ? "sign_disc" : "sign_square";

  TriangleMesh pole;
  append_cylinder(pole, {0, 0, 0}, 0.035f, 2.3f, 8);
  p.parts.push_back(make_part(std::move(pole), kGalvanized, ClassId::traffic_sign));

  TriangleMesh plate;
  if (variant == 0) {
    append_cylinder_axis(plate, {0, 0, 2.55f}, 0, 0.38f, 0.015f, 16);
  } else {
    append_box(plate, {0, 0, 2.55f}, {0.02f, 0.35f, 0.35f});
  }
  const Material face = variant == 0 ? Material::make_lambertian({0.62f, 0.08f, 0.08f})
                                     : Material::make_lambertian({0.08f, 0.16f, 0.5f});
  p.parts.push_back(make_part(std::move(plate), face, ClassId::traffic_sign));
  return p;
}

Prototype build_traffic_light(int variant) {
  Prototype p;
  p.name = variant == 0 ? "traffic_light_post" : "traffic_light_arm";

  TriangleMesh pole;
  append_cylinder(pole, {0, 0, 0}, 0.06f, variant == 0 ? 3.4f : 4.6f, 8);
  if (variant == 1) append_box(pole, {0, 1.1f, 4.5f}, {0.05f, 1.1f, 0.05f});
  p.parts.push_back(make_part(std::move(pole), kDarkMetal, ClassId::traffic_light));

  const Vec3 head_center = variant == 0 ? Vec3(0.0f, 0.0f, 3.75f) : Vec3(0.0f, 2.1f, 4.35f);
  TriangleMesh head;
  append_box(head, head_center, {0.12f, 0.16f, 0.42f});
  p.parts.push_back(make_part(std::move(head), kDarkMetal, ClassId::traffic_light));

  // Three lamps on the +x face; one lit, the others dark.
  const int lit = variant == 0 ? 0 : 2;  // 0 = red on top, 2 = green at the bottom
  static const Spectrum lamp_colors[3] = {
      {18.0f, 1.2f, 1.2f}, {16.0f, 10.0f, 1.0f}, {1.2f, 16.0f, 4.0f}};
  for (int i = 0; i < 3; ++i) {
    TriangleMesh lamp;
    const float z = head_center.z + 0.26f - 0.26f * i;
    const float x = head_center.x + 0.125f;
    append_quad(lamp, {x, head_center.y - 0.08f, z - 0.08f}, {x, head_center.y + 0.08f, z - 0.08f},
                {x, head_center.y + 0.08f, z + 0.08f}, {x, head_center.y - 0.08f, z + 0.08f});
    const Material mat = i == lit ? Material::make_emissive(lamp_colors[i])
                                  : Material::make_lambertian({0.05f, 0.05f, 0.05f});
    p.parts.push_back(make_part(std::move(lamp), mat, ClassId::traffic_light));
  }
  return p;
}

Prototype build_vegetation(int variant) {
  Prototype p;
  if (variant == 0) {
    p.name = "tree_cone";
    TriangleMesh trunk;
    append_cylinder(trunk, {0, 0, 0}, 0.14f, 1.8f, 8);
    p.parts.push_back(make_part(std::move(trunk), kTrunk, ClassId::vegetation));
    TriangleMesh canopy;
    append_cone(canopy, {0, 0, 1.5f}, 1.5f, 3.6f, 10);
    p.parts.push_back(make_part(std::move(canopy),
                                Material::make_lambertian({0.07f, 0.20f, 0.06f}),
                                ClassId::vegetation, true));
  } else if (variant == 1) {
    p.name = "tree_round";
    TriangleMesh trunk;
    append_cylinder(trunk, {0, 0, 0}, 0.17f, 2.4f, 8);
    p.parts.push_back(make_part(std::move(trunk), kTrunk, ClassId::vegetation));
    TriangleMesh canopy;
    append_icosphere(canopy, {0, 0, 3.6f}, 1.8f, 1);
    p.parts.push_back(make_part(std::move(canopy),
                                Material::make_lambertian({0.10f, 0.24f, 0.08f}),
                                ClassId::vegetation, true));
  } else {
    p.name = "bush";
    TriangleMesh canopy;
    append_icosphere(canopy, {0, 0, 0.45f}, 0.55f, 1);
    for (Vec3& pos : canopy.positions) pos.z *= 0.8f;
    for (Vec3& n : canopy.normals) n = normalize(Vec3(n.x, n.y, n.z / 0.8f));
    p.parts.push_back(make_part(std::move(canopy),
                                Material::make_lambertian({0.09f, 0.22f, 0.07f}),
                                ClassId::vegetation, true));
  }
  return p;
}

Prototype build_pole(int variant) {
  Prototype p;
  if (variant == 0) {
    p.name = "pole_utility";
    TriangleMesh shaft;
    append_cylinder(shaft, {0, 0, 0}, 0.055f, 4.4f, 8);
    p.parts.push_back(make_part(std::move(shaft), kGalvanized, ClassId::pole));
  } else {
    p.name = "pole_lamp";
    TriangleMesh shaft;
    append_cylinder(shaft, {0, 0, 0}, 0.07f, 5.4f, 8);
    append_box(shaft, {0, 0.55f, 5.35f}, {0.04f, 0.55f, 0.04f});
    append_box(shaft, {0, 1.05f, 5.28f}, {0.12f, 0.25f, 0.07f});  // lamp head
    p.parts.push_back(make_part(std::move(shaft), kDarkMetal, ClassId::pole));
  }
  return p;
}

}  // namespace

AssetLibrary AssetLibrary::builtin() {
  AssetLibrary lib;
  lib.groups_["car"] = {build_car(0), build_car(1)};
  lib.groups_["truck"] = {build_truck(0), build_truck(1)};
  lib.groups_["bus"] = {build_bus(0), build_bus(1)};
  lib.groups_["motorcycle"] = {build_motorcycle(0), build_motorcycle(1)};
  lib.groups_["pedestrian"] = {build_pedestrian(0), build_pedestrian(1)};
  lib.groups_["rider_bicycle"] = {build_rider_bicycle(0), build_rider_bicycle(1)};
  lib.groups_["traffic_sign"] = {build_traffic_sign(0), build_traffic_sign(1)};
  lib.groups_["traffic_light"] = {build_traffic_light(0), build_traffic_light(1)};
  lib.groups_["vegetation"] = {build_vegetation(0), build_vegetation(1), build_vegetation(2)};
  lib.groups_["pole"] = {build_pole(0), build_pole(1)};
  return lib;
}

AssetLibrary AssetLibrary::load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  AssetLibrary lib;
  for (const std::string& group : asset_group_names()) {
    std::vector<Prototype>& protos = lib.groups_[group];
    for (int variant = 0;; ++variant) {
      const fs::path path = fs::path(dir) / (group + "_" + std::to_string(variant) + ".usmesh");
      if (!fs::exists(path)) break;
      protos.push_back(read_prototype_file(path.string()));
    }
    if (protos.size() < 2)
      throw std::runtime_error("asset library: group '" + group + "' needs at least 2 variants in " +
                               dir);
  }
  return lib;
}

const std::vector<Prototype>& AssetLibrary::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw std::invalid_argument("unknown asset group: " + name);
  return it->second;
}

int AssetLibrary::variant_count(const std::string& name) const {
  return static_cast<int>(group(name).size());
}

const Prototype& AssetLibrary::prototype(const std::string& name, int variant) const {
  const auto& g = group(name);
  if (variant < 0 || variant >= static_cast<int>(g.size()))
    throw std::invalid_argument("asset group '" + name + "': no variant " +
                                std::to_string(variant));
  return g[variant];
}

}  // namespace urbansynth
