#include "urbansynth/worldgen.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "urbansynth/rng.hpp"

namespace urbansynth {

using nlohmann::ordered_json;

namespace {

// Stable parameter ids for the counter-based streams. Never reorder; append
// only.
enum Param : uint32_t {
  kRoadWidth = 0,
  kLaneCount = 1,
  kRoadMaterial = 2,
  kCrackDensity = 3,
  kRepairDensity = 4,
  kSidewalkWidth = 8,
  kCurbHeight = 9,
  kSidewalkMaterial = 10,
  kDirtAmount = 11,
  kBuildingsRight = 16,
  kBuildingsLeft = 17,
  kBuildingFraction = 18,
  kCrosswalk = 24,
  kSunLongitude = 32,
  kSunLatitude = 33,
  kSunRadius = 34,
  kSunIntensity = 35,
  kCloudCover = 36,
  kCloudSeed = 37,
  kCameraHeight = 48,
  kCameraLateral = 49,
  kCameraYaw = 50,
  kCameraPitch = 51,
  kCameraFov = 52,
  kCameraSpeed = 53,
  kExposureTime = 54,
  kCameraExposure = 55,
  kCountBase = 64,      // + category
  kPlacementBase = 128  // stream = (kPlacementBase + category) << 32 | instance
};

RandomStream param_stream(uint64_t seed, uint32_t param) { return RandomStream(seed, param); }

RandomStream placement_stream(uint64_t seed, PlacementCategory cat, uint32_t instance) {
  const uint64_t stream =
      (static_cast<uint64_t>(kPlacementBase + static_cast<uint32_t>(cat)) << 32) | instance;
  return RandomStream(seed, stream);
}

const std::array<std::string, kPlacementCategoryCount> kCategoryNames = {
    "car",  "truck",      "bus",  "motorcycle", "rider",
    "pedestrian", "vegetation", "pole", "traffic_light", "traffic_sign"};

const std::array<std::string, kPlacementCategoryCount> kGroupNames = {
    "car",        "truck",      "bus",  "motorcycle",    "rider_bicycle",
    "pedestrian", "vegetation", "pole", "traffic_light", "traffic_sign"};

// Built-in clothing palette for pedestrians and riders.
const std::array<Spectrum, 6> kClothingColors = {{{0.30f, 0.30f, 0.50f},
                                                  {0.45f, 0.10f, 0.10f},
                                                  {0.15f, 0.35f, 0.20f},
                                                  {0.55f, 0.50f, 0.45f},
                                                  {0.10f, 0.10f, 0.12f},
                                                  {0.50f, 0.35f, 0.15f}}};

struct PlacedFootprint {
  float x, y, radius;
};

bool collides(const std::vector<PlacedFootprint>& placed, float x, float y, float radius) {
  for (const auto& p : placed) {
    const float dx = x - p.x, dy = y - p.y;
    const float rr = radius + p.radius;
    if (dx * dx + dy * dy < rr * rr) return true;
  }
  return false;
}

int vegetation_variant_for(const std::string& type) {
  if (type == "tree_cone") return 0;
  if (type == "tree_round") return 1;
  if (type == "bush") return 2;
  throw std::invalid_argument("scope: vegetation.types: unknown type '" + type + "'");
}

}  // namespace

const std::string& placement_category_name(PlacementCategory c) {
  return kCategoryNames[static_cast<int>(c)];
}
const std::string& placement_group_name(PlacementCategory c) {
  return kGroupNames[static_cast<int>(c)];
}

Vec2 prototype_footprint(const Prototype& proto) {
  const Aabb b = proto.bounds();
  return {std::fmax(std::fabs(b.lo.x), std::fabs(b.hi.x)),
          std::fmax(std::fabs(b.lo.y), std::fabs(b.hi.y))};
}

WorldSpec sample_world(const ScenarioScope& scope, uint64_t seed, const AssetLibrary& library) {
  scope.validate();

  WorldSpec w;
  w.master_seed = seed;

  {
    auto rng = param_stream(seed, kRoadWidth);
    w.road_width = rng.next_in(scope.road_width.lo, scope.road_width.hi);
  }
  {
    auto rng = param_stream(seed, kLaneCount);
    w.lane_count = static_cast<int>(rng.next_int(scope.lane_count.lo, scope.lane_count.hi));
  }
  {
    auto rng = param_stream(seed, kRoadMaterial);
    w.road_material =
        scope.road_materials[rng.next_int(0, static_cast<int>(scope.road_materials.size()) - 1)];
  }
  {
    auto rng = param_stream(seed, kCrackDensity);
    w.crack_density = rng.next_in(scope.crack_density.lo, scope.crack_density.hi);
  }
  {
    auto rng = param_stream(seed, kRepairDensity);
    w.repair_density = rng.next_in(scope.repair_density.lo, scope.repair_density.hi);
  }
  {
    auto rng = param_stream(seed, kSidewalkWidth);
    w.sidewalk_width = rng.next_in(scope.sidewalk_width.lo, scope.sidewalk_width.hi);
  }
  {
    auto rng = param_stream(seed, kCurbHeight);
    w.curb_height = rng.next_in(scope.curb_height.lo, scope.curb_height.hi);
  }
  {
    auto rng = param_stream(seed, kSidewalkMaterial);
    w.sidewalk_material = scope.sidewalk_materials[rng.next_int(
        0, static_cast<int>(scope.sidewalk_materials.size()) - 1)];
  }
  {
    auto rng = param_stream(seed, kDirtAmount);
    w.dirt_amount = rng.next_in(scope.dirt_amount.lo, scope.dirt_amount.hi);
  }

  // Building lots, one stream per street side, sequential draws along the walk.
  float building_fraction;
  {
    auto rng = param_stream(seed, kBuildingFraction);
    building_fraction = rng.next_in(scope.building_fraction.lo, scope.building_fraction.hi);
  }
  for (int side : {+1, -1}) {
    auto rng = param_stream(seed, side > 0 ? kBuildingsRight : kBuildingsLeft);
    float x = kStreetXMin;
    while (x < kStreetXMax) {
      const float lot_width = rng.next_in(scope.building_width.lo, scope.building_width.hi);
      const bool present = rng.next_float() < building_fraction;
      if (present) {
        BuildingSpec b;
        b.side = side;
        b.x0 = x;
        b.width = lot_width;
        b.depth = rng.next_in(scope.building_depth.lo, scope.building_depth.hi);
        b.height = rng.next_in(scope.building_height.lo, scope.building_height.hi);
        b.window_width = rng.next_in(scope.window_width.lo, scope.window_width.hi);
        b.window_height = rng.next_in(scope.window_height.lo, scope.window_height.hi);
        b.window_depth = rng.next_in(scope.window_depth.lo, scope.window_depth.hi);
        b.material = scope.building_materials[rng.next_int(
            0, static_cast<int>(scope.building_materials.size()) - 1)];
        b.albedo_scale = rng.next_in(0.88f, 1.12f);
        w.buildings.push_back(b);
      }
      x += lot_width + rng.next_in(0.8f, 4.0f);
    }
  }

  {
    auto rng = param_stream(seed, kCrosswalk);
    w.has_crosswalk = rng.next_float() < scope.crosswalk_probability;
    w.crosswalk_x = rng.next_in(10.0f, 60.0f);
  }

  {
    auto rng = param_stream(seed, kSunLongitude);
    w.sky.sun_longitude_deg = rng.next_in(scope.sun_longitude.lo, scope.sun_longitude.hi);
  }
  {
    auto rng = param_stream(seed, kSunLatitude);
    w.sky.sun_latitude_deg = rng.next_in(scope.sun_latitude.lo, scope.sun_latitude.hi);
  }
  {
    auto rng = param_stream(seed, kSunRadius);
    w.sky.sun_angular_radius_deg =
        rng.next_in(scope.sun_angular_radius.lo, scope.sun_angular_radius.hi);
  }
  {
    auto rng = param_stream(seed, kSunIntensity);
    const float intensity = rng.next_in(scope.sun_intensity.lo, scope.sun_intensity.hi);
    // Warmer toward the horizon.
    const float warm = clampf(1.0f - w.sky.sun_latitude_deg / 90.0f, 0.0f, 1.0f);
    w.sky.sun_radiance = {intensity * (1.0f + 0.15f * warm), intensity * (0.92f - 0.08f * warm),
                          intensity * (0.78f - 0.30f * warm)};
    // Sky gradient dims and warms with low sun, dims under cloud.
    const float elevation_t = clampf(w.sky.sun_latitude_deg / 70.0f, 0.0f, 1.0f);
    const float sky_level = 0.5f + 0.5f * elevation_t;
    w.sky.sky_zenith_radiance = Spectrum{0.16f, 0.26f, 0.52f} * sky_level;
    w.sky.sky_horizon_radiance =
        Spectrum{0.55f + 0.2f * warm, 0.60f, 0.72f - 0.2f * warm} * sky_level;
  }
  {
    auto rng = param_stream(seed, kCloudCover);
    w.sky.cloud_cover = rng.next_in(scope.cloud_cover.lo, scope.cloud_cover.hi);
  }
  {
    auto rng = param_stream(seed, kCloudSeed);
    w.sky.cloud_noise_seed = rng.next_u32();
  }

  {
    auto rng = param_stream(seed, kCameraHeight);
    w.camera_height = rng.next_in(scope.camera_height.lo, scope.camera_height.hi);
  }
  {
    auto rng = param_stream(seed, kCameraLateral);
    w.camera_lateral = rng.next_in(-0.3f, 0.3f);
  }
  {
    auto rng = param_stream(seed, kCameraYaw);
    w.camera_yaw_deg = rng.next_in(-4.0f, 4.0f);
  }
  {
    auto rng = param_stream(seed, kCameraPitch);
    w.camera_pitch_deg = rng.next_in(-2.5f, 1.0f);
  }
  {
    auto rng = param_stream(seed, kCameraFov);
    w.camera_fov_deg = rng.next_in(scope.camera_fov.lo, scope.camera_fov.hi);
  }
  {
    auto rng = param_stream(seed, kCameraSpeed);
    w.camera_speed = rng.next_in(scope.camera_speed.lo, scope.camera_speed.hi);
  }
  {
    auto rng = param_stream(seed, kExposureTime);
    w.exposure_time_s = rng.next_in(scope.exposure_time_ms.lo, scope.exposure_time_ms.hi) * 1e-3f;
  }
  {
    auto rng = param_stream(seed, kCameraExposure);
    w.camera_exposure = rng.next_in(scope.camera_exposure.lo, scope.camera_exposure.hi);
  }

  // Placements. Sampling order is fixed; see PlacementCategory.
  const float half_road = w.road_width * 0.5f;
  const float lane_w = w.lane_width();
  const float ego_y = w.ego_lane_center() + w.camera_lateral;
  std::vector<PlacedFootprint> placed;

  auto count_for = [&](PlacementCategory cat, const RangeI& range) {
    auto rng = param_stream(seed, kCountBase + static_cast<uint32_t>(cat));
    return static_cast<int>(rng.next_int(range.lo, range.hi));
  };

  auto lane_center = [&](int lane) { return -half_road + (lane + 0.5f) * lane_w; };

  auto place_vehicle = [&](PlacementCategory cat, int index, const Vec2& footprint) {
    auto rng = placement_stream(seed, cat, index);
    const auto& group = library.group(placement_group_name(cat));
    const float radius = std::hypot(footprint.x, footprint.y);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Placement p;
      p.category = cat;
      p.variant = static_cast<int>(rng.next_int(0, static_cast<int>(group.size()) - 1));
      const std::string& rule =
          scope.car_placement[rng.next_int(0, static_cast<int>(scope.car_placement.size()) - 1)];
      const float x = rng.next_in(kStreetXMin + 5.0f, kStreetXMax - 10.0f);
      float y, yaw;
      if (rule == "parked") {
        const int side = rng.next_float() < 0.5f ? -1 : 1;
        y = side * (half_road - footprint.y - 0.3f);
        yaw = side < 0 ? 0.0f : kPi;
      } else {
        const int lane = static_cast<int>(rng.next_int(0, w.lane_count - 1));
        y = lane_center(lane) + rng.next_in(-0.15f, 0.15f);
        yaw = (y < 0 ? 0.0f : kPi) + rng.next_in(-0.03f, 0.03f);
      }
      if (std::fabs(x) < 7.0f && std::fabs(y - ego_y) < 2.5f) continue;  // ego exclusion
      if (collides(placed, x, y, radius)) continue;
      p.position = {x, y, 0.0f};
      p.yaw = yaw;
      p.rule = rule;
      if (cat != PlacementCategory::rider) {
        p.has_color = true;
        p.color = scope.car_colors[rng.next_int(
            0, static_cast<int>(scope.car_colors.size()) - 1)];
      }
      placed.push_back({x, y, radius});
      w.placements.push_back(std::move(p));
      return;
    }
    throw std::runtime_error("infeasible scope: could not place " +
                             placement_category_name(cat) + " #" + std::to_string(index) +
                             " after 1000 attempts (road region too crowded)");
  };

  auto footprint_of = [&](PlacementCategory cat, int variant) {
    return prototype_footprint(library.prototype(placement_group_name(cat), variant));
  };

  // Vehicles. Footprints use the largest variant, conservatively.
  auto max_footprint = [&](PlacementCategory cat) {
    Vec2 f{0, 0};
    const auto& group = library.group(placement_group_name(cat));
    for (const auto& proto : group) {
      const Vec2 g = prototype_footprint(proto);
      f.x = std::fmax(f.x, g.x);
      f.y = std::fmax(f.y, g.y);
    }
    return f;
  };

  const int n_cars = count_for(PlacementCategory::car, scope.car_count);
  for (int i = 0; i < n_cars; ++i)
    place_vehicle(PlacementCategory::car, i, max_footprint(PlacementCategory::car));
  const int n_trucks = count_for(PlacementCategory::truck, scope.truck_count);
  for (int i = 0; i < n_trucks; ++i)
    place_vehicle(PlacementCategory::truck, i, max_footprint(PlacementCategory::truck));
  const int n_buses = count_for(PlacementCategory::bus, scope.bus_count);
  for (int i = 0; i < n_buses; ++i)
    place_vehicle(PlacementCategory::bus, i, max_footprint(PlacementCategory::bus));
  const int n_motos = count_for(PlacementCategory::motorcycle, scope.motorcycle_count);
  for (int i = 0; i < n_motos; ++i)
    place_vehicle(PlacementCategory::motorcycle, i, max_footprint(PlacementCategory::motorcycle));

  // Riders keep to the curb lane.
  const int n_riders = count_for(PlacementCategory::rider, scope.rider_count);
  for (int i = 0; i < n_riders; ++i) {
    auto rng = placement_stream(seed, PlacementCategory::rider, i);
    const auto& group = library.group("rider_bicycle");
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      Placement p;
      p.category = PlacementCategory::rider;
      p.variant = static_cast<int>(rng.next_int(0, static_cast<int>(group.size()) - 1));
      const Vec2 fp = footprint_of(PlacementCategory::rider, p.variant);
      const float radius = std::hypot(fp.x, fp.y);
      const float x = rng.next_in(kStreetXMin + 5.0f, kStreetXMax - 10.0f);
      const int side = rng.next_float() < 0.5f ? -1 : 1;
      const float y = side * (half_road - 0.9f) + rng.next_in(-0.2f, 0.2f);
      if (std::fabs(x) < 7.0f && std::fabs(y - ego_y) < 2.5f) continue;
      if (collides(placed, x, y, radius)) continue;
      p.position = {x, y, 0.0f};
      p.yaw = (side < 0 ? 0.0f : kPi) + rng.next_in(-0.05f, 0.05f);
      p.rule = "lane";
      p.has_color = true;
      p.color = kClothingColors[rng.next_int(0, static_cast<int>(kClothingColors.size()) - 1)];
      placed.push_back({x, y, radius});
      w.placements.push_back(std::move(p));
      done = true;
    }
    if (!done)
      throw std::runtime_error("infeasible scope: could not place rider #" + std::to_string(i) +
                               " after 1000 attempts (curb lane too crowded)");
  }

  // Pedestrians follow their sampled placement rule.
  const int n_peds = count_for(PlacementCategory::pedestrian, scope.pedestrian_count);
  for (int i = 0; i < n_peds; ++i) {
    auto rng = placement_stream(seed, PlacementCategory::pedestrian, i);
    const auto& group = library.group("pedestrian");
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      Placement p;
      p.category = PlacementCategory::pedestrian;
      p.variant = static_cast<int>(rng.next_int(0, static_cast<int>(group.size()) - 1));
      const Vec2 fp = footprint_of(PlacementCategory::pedestrian, p.variant);
      const float radius = std::hypot(fp.x, fp.y);
      std::string rule = scope.pedestrian_placement[rng.next_int(
          0, static_cast<int>(scope.pedestrian_placement.size()) - 1)];
      if (rule == "crosswalk" && !w.has_crosswalk) rule = "sidewalk";
      float x, y, z, yaw;
      if (rule == "sidewalk") {
        const int side = rng.next_float() < 0.5f ? -1 : 1;
        x = rng.next_in(kStreetXMin + 3.0f, kStreetXMax - 5.0f);
        y = side * rng.next_in(half_road + 0.4f, half_road + w.sidewalk_width - 0.4f);
        z = w.curb_height;
        yaw = rng.next_in(0.0f, kTwoPi);
      } else if (rule == "crosswalk") {
        x = w.crosswalk_x + rng.next_in(-1.2f, 1.2f);
        y = rng.next_in(-half_road + 0.4f, half_road - 0.4f);
        z = 0.0f;
        yaw = (rng.next_float() < 0.5f ? 0.5f : -0.5f) * kPi + rng.next_in(-0.2f, 0.2f);
      } else {  // road
        x = rng.next_in(kStreetXMin + 5.0f, kStreetXMax - 10.0f);
        y = rng.next_in(-half_road + 0.5f, half_road - 0.5f);
        z = 0.0f;
        yaw = rng.next_in(0.0f, kTwoPi);
      }
      if (std::fabs(x) < 5.0f && std::fabs(y - ego_y) < 2.0f) continue;
      if (collides(placed, x, y, radius)) continue;
      p.position = {x, y, z};
      p.yaw = yaw;
      p.rule = rule;
      p.has_color = true;
      p.color = kClothingColors[rng.next_int(0, static_cast<int>(kClothingColors.size()) - 1)];
      placed.push_back({x, y, radius});
      w.placements.push_back(std::move(p));
      done = true;
    }
    if (!done)
      throw std::runtime_error("infeasible scope: could not place pedestrian #" +
                               std::to_string(i) + " after 1000 attempts (area too crowded)");
  }

  // Vegetation on the verge strips.
  const int n_veg = count_for(PlacementCategory::vegetation, scope.vegetation_count);
  for (int i = 0; i < n_veg; ++i) {
    auto rng = placement_stream(seed, PlacementCategory::vegetation, i);
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      Placement p;
      p.category = PlacementCategory::vegetation;
      const std::string& type = scope.vegetation_types[rng.next_int(
          0, static_cast<int>(scope.vegetation_types.size()) - 1)];
      p.variant = vegetation_variant_for(type);
      const Vec2 fp = footprint_of(PlacementCategory::vegetation, p.variant);
      const float radius = std::hypot(fp.x, fp.y);
      const int side = rng.next_float() < 0.5f ? -1 : 1;
      const float x = rng.next_in(kStreetXMin + 2.0f, kStreetXMax - 2.0f);
      const float y =
          side * rng.next_in(half_road + w.sidewalk_width + 0.6f,
                             half_road + w.sidewalk_width + kVergeWidth - 0.6f);
      if (collides(placed, x, y, radius)) continue;
      p.position = {x, y, kTerrainLevel};
      p.yaw = rng.next_in(0.0f, kTwoPi);
      p.rule = "verge";
      p.has_color = true;
      const float g = rng.next_in(0.8f, 1.2f);
      p.color = {0.08f * g, 0.22f * g, 0.07f * g};
      placed.push_back({x, y, radius});
      w.placements.push_back(std::move(p));
      done = true;
    }
    if (!done)
      throw std::runtime_error("infeasible scope: could not place vegetation #" +
                               std::to_string(i) + " after 1000 attempts (verge too crowded)");
  }

  // Street furniture along the outer sidewalk edge.
  auto place_furniture = [&](PlacementCategory cat, int count) {
    for (int i = 0; i < count; ++i) {
      auto rng = placement_stream(seed, cat, i);
      const auto& group = library.group(placement_group_name(cat));
      bool done = false;
      for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
        Placement p;
        p.category = cat;
        p.variant = static_cast<int>(rng.next_int(0, static_cast<int>(group.size()) - 1));
        const Vec2 fp = footprint_of(cat, p.variant);
        const float radius = std::fmax(0.6f, std::hypot(fp.x, fp.y));
        const int side = rng.next_float() < 0.5f ? -1 : 1;
        const float x = rng.next_in(kStreetXMin + 2.0f, kStreetXMax - 2.0f);
        const float y = side * (half_road + w.sidewalk_width - 0.35f);
        if (collides(placed, x, y, radius)) continue;
        p.position = {x, y, w.curb_height};
        // Heads and arms face the road.
        p.yaw = side < 0 ? 0.0f : kPi;
        p.rule = "curbline";
        placed.push_back({x, y, radius});
        w.placements.push_back(std::move(p));
        done = true;
      }
      if (!done)
        throw std::runtime_error("infeasible scope: could not place " +
                                 placement_category_name(cat) + " #" + std::to_string(i) +
                                 " after 1000 attempts (sidewalk edge too crowded)");
    }
  };
  place_furniture(PlacementCategory::pole, count_for(PlacementCategory::pole, scope.pole_count));
  place_furniture(PlacementCategory::traffic_light,
                  count_for(PlacementCategory::traffic_light, scope.traffic_light_count));
  place_furniture(PlacementCategory::traffic_sign,
                  count_for(PlacementCategory::traffic_sign, scope.traffic_sign_count));

  return w;
}

Camera camera_from_spec(const WorldSpec& spec, int image_width, int image_height) {
  Camera cam;
  const float yaw = radians(spec.camera_yaw_deg);
  const float pitch = radians(spec.camera_pitch_deg);
  const Vec3 eye{0.0f, spec.ego_lane_center() + spec.camera_lateral, spec.camera_height};
  const Vec3 forward{std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw),
                     std::sin(pitch)};
  cam.pose = RigidTransform::look_at(eye, eye + forward, {0, 0, 1});
  const Vec3 travel{std::cos(yaw), std::sin(yaw), 0.0f};
  cam.pose_at_shutter_end = cam.pose;
  cam.pose_at_shutter_end.translation =
      eye + travel * (spec.camera_speed * spec.exposure_time_s);
  cam.vertical_fov_deg = spec.camera_fov_deg;
  cam.width = image_width;
  cam.height = image_height;
  cam.shutter_open = 0.0f;
  cam.shutter_close = 1.0f;
  cam.exposure = spec.camera_exposure;
  return cam;
}

std::string worldspec_to_json_text(const WorldSpec& w) {
  ordered_json j;
  j["master_seed"] = w.master_seed;
  j["road"] = {{"width", w.road_width},
               {"lanes", w.lane_count},
               {"material", w.road_material},
               {"crack_density", w.crack_density},
               {"repair_density", w.repair_density}};
  j["sidewalk"] = {{"width", w.sidewalk_width},
                   {"curb_height", w.curb_height},
                   {"material", w.sidewalk_material},
                   {"dirt_amount", w.dirt_amount}};
  j["crosswalk"] = {{"present", w.has_crosswalk}, {"x", w.crosswalk_x}};
  ordered_json buildings = ordered_json::array();
  for (const BuildingSpec& b : w.buildings) {
    buildings.push_back({{"side", b.side},
                         {"x0", b.x0},
                         {"width", b.width},
                         {"depth", b.depth},
                         {"height", b.height},
                         {"window_width", b.window_width},
                         {"window_height", b.window_height},
                         {"window_depth", b.window_depth},
                         {"material", b.material},
                         {"albedo_scale", b.albedo_scale}});
  }
  j["buildings"] = std::move(buildings);
  j["sun"] = {{"longitude", w.sky.sun_longitude_deg},
              {"latitude", w.sky.sun_latitude_deg},
              {"angular_radius", w.sky.sun_angular_radius_deg},
              {"radiance", {w.sky.sun_radiance.r, w.sky.sun_radiance.g, w.sky.sun_radiance.b}},
              {"zenith",
               {w.sky.sky_zenith_radiance.r, w.sky.sky_zenith_radiance.g,
                w.sky.sky_zenith_radiance.b}},
              {"horizon",
               {w.sky.sky_horizon_radiance.r, w.sky.sky_horizon_radiance.g,
                w.sky.sky_horizon_radiance.b}},
              {"cloud_cover", w.sky.cloud_cover},
              {"cloud_seed", w.sky.cloud_noise_seed}};
  j["camera"] = {{"height", w.camera_height},
                 {"lateral", w.camera_lateral},
                 {"yaw", w.camera_yaw_deg},
                 {"pitch", w.camera_pitch_deg},
                 {"fov", w.camera_fov_deg},
                 {"speed", w.camera_speed},
                 {"exposure_time_s", w.exposure_time_s},
                 {"exposure", w.camera_exposure}};
  ordered_json placements = ordered_json::array();
  for (const Placement& p : w.placements) {
    ordered_json pj = {{"category", placement_category_name(p.category)},
                       {"variant", p.variant},
                       {"position", {p.position.x, p.position.y, p.position.z}},
                       {"yaw", p.yaw},
                       {"rule", p.rule}};
    if (p.has_color) pj["color"] = {p.color.r, p.color.g, p.color.b};
    placements.push_back(std::move(pj));
  }
  j["placements"] = std::move(placements);
  return j.dump();
}

uint64_t worldspec_hash(const WorldSpec& spec) {
  const std::string text = worldspec_to_json_text(spec);
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace urbansynth
