#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "urbansynth/assets.hpp"
#include "urbansynth/camera.hpp"
#include "urbansynth/scope.hpp"
#include "urbansynth/sky.hpp"

namespace urbansynth {

// Street layout: a single straight segment along +x with the ego camera near
// x = 0 looking down the street. All worlds share these extents; the camera
// relevance region culls what the image cannot see.
constexpr float kStreetXMin = -60.0f;
constexpr float kStreetXMax = 160.0f;
constexpr float kVergeWidth = 3.0f;      // terrain strip between sidewalk and lots
constexpr float kTerrainLevel = -0.02f;  // terrain sits just below the road surface
constexpr float kSceneFarPlane = 500.0f;

struct BuildingSpec {
  int side = 1;  // -1: y < 0, +1: y > 0
  float x0 = 0;  // lot start along the street
  float width = 10;
  float depth = 10;
  float height = 12;
  float window_width = 1.2f;
  float window_height = 1.5f;
  float window_depth = 0.2f;
  std::string material = "plaster_white";
  float albedo_scale = 1.0f;  // per-building jitter
};

// Placement categories in sampling order; instance indices per class follow
// this order.
enum class PlacementCategory : uint8_t {
  car = 0,
  truck,
  bus,
  motorcycle,
  rider,
  pedestrian,
  vegetation,
  pole,
  traffic_light,
  traffic_sign,
};
constexpr int kPlacementCategoryCount = 10;
const std::string& placement_category_name(PlacementCategory c);
const std::string& placement_group_name(PlacementCategory c);  // asset library group

struct Placement {
  PlacementCategory category = PlacementCategory::car;
  int variant = 0;
  Vec3 position;
  float yaw = 0;  // radians about z
  bool has_color = false;
  Spectrum color;    // paint override for paintable parts
  std::string rule;  // lane | parked | sidewalk | crosswalk | road | verge | curbline
};

// One concrete sampled world; every field lies inside its scope range.
struct WorldSpec {
  uint64_t master_seed = 0;

  float road_width = 8;
  int lane_count = 2;
  std::string road_material = "asphalt_dark";
  float crack_density = 0;
  float repair_density = 0;

  float sidewalk_width = 2;
  float curb_height = 0.1f;
  std::string sidewalk_material = "concrete";
  float dirt_amount = 0;

  bool has_crosswalk = false;
  float crosswalk_x = 20;

  std::vector<BuildingSpec> buildings;

  SunSky sky;

  float camera_height = 1.5f;
  float camera_lateral = 0;  // offset from the ego lane center
  float camera_yaw_deg = 0;
  float camera_pitch_deg = 0;
  float camera_fov_deg = 60;
  float camera_speed = 0;       // m/s along the street
  float exposure_time_s = 0.005f;
  float camera_exposure = 1.0f;

  std::vector<Placement> placements;

  float lane_width() const { return road_width / lane_count; }
  // Rightmost lane center (the ego lane): heading +x traffic keeps y < 0.
  float ego_lane_center() const { return -road_width * 0.5f + lane_width() * 0.5f; }
};

// Deterministic in (scope, seed): every parameter draws from a counter-based
// stream keyed by (seed, parameter id), so adding parameters later does not
// perturb existing streams. Throws std::runtime_error naming the constraint
// when a placement cannot be satisfied after 1000 attempts.
WorldSpec sample_world(const ScenarioScope& scope, uint64_t seed, const AssetLibrary& library);

// Ego camera derived from the sampled camera parameters. The shutter-end
// pose advances along the heading by speed * exposure_time.
Camera camera_from_spec(const WorldSpec& spec, int image_width, int image_height);

// Stable serialization (insertion-ordered JSON); equal specs produce equal
// bytes, which backs the uniqueness hash below.
std::string worldspec_to_json_text(const WorldSpec& spec);
uint64_t worldspec_hash(const WorldSpec& spec);

// Half extents of a placed prototype's ground footprint, used for the
// collision-free placement rule.
Vec2 prototype_footprint(const Prototype& proto);

}  // namespace urbansynth
