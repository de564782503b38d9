#pragma once

#include <array>
#include <string>
#include <vector>

#include "urbansynth/spectrum.hpp"

namespace urbansynth {

struct RangeF {
  float lo = 0.0f;
  float hi = 0.0f;
  bool contains(float v) const { return v >= lo && v <= hi; }
};

struct RangeI {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return v >= lo && v <= hi; }
};

// Parameter ranges and choice sets a world is sampled from. One concrete
// WorldSpec is drawn per image; see docs/scope_format.md for the file schema
// and the default values below.
struct ScenarioScope {
  // Road.
  RangeF road_width{6.0f, 12.0f};  // meters, full cross-section
  RangeI lane_count{2, 4};
  std::vector<std::string> road_materials{"asphalt_dark", "asphalt_light", "concrete"};
  RangeF crack_density{0.0f, 0.8f};
  RangeF repair_density{0.0f, 0.6f};

  // Sidewalk.
  RangeF sidewalk_width{1.5f, 4.0f};
  RangeF curb_height{0.04f, 0.2f};
  std::vector<std::string> sidewalk_materials{"concrete", "pavers"};
  RangeF dirt_amount{0.0f, 1.0f};

  // Buildings.
  RangeF building_height{6.0f, 25.0f};
  RangeF building_width{8.0f, 18.0f};
  RangeF building_depth{8.0f, 14.0f};
  RangeF window_height{1.1f, 1.9f};
  RangeF window_width{0.8f, 1.6f};
  RangeF window_depth{0.08f, 0.35f};
  std::vector<std::string> building_materials{"plaster_white", "plaster_beige", "brick_red",
                                              "concrete_panel"};
  // Probability that a lot carries a building (gaps show terrain).
  RangeF building_fraction{0.85f, 1.0f};

  // Vehicles (library assets).
  RangeI car_count{1, 5};
  RangeI truck_count{1, 2};
  RangeI bus_count{1, 1};
  RangeI motorcycle_count{1, 2};
  std::vector<std::string> car_placement{"lane", "parked"};
  std::vector<Spectrum> car_colors{
      {0.70f, 0.70f, 0.70f}, {0.05f, 0.05f, 0.06f}, {0.35f, 0.36f, 0.38f},
      {0.45f, 0.05f, 0.05f}, {0.05f, 0.10f, 0.38f}, {0.07f, 0.25f, 0.12f},
      {0.60f, 0.45f, 0.12f},
  };

  // Pedestrians and riders.
  RangeI pedestrian_count{2, 8};
  std::vector<std::string> pedestrian_placement{"sidewalk", "crosswalk", "road"};
  RangeI rider_count{1, 3};

  // Vegetation.
  RangeI vegetation_count{2, 10};
  std::vector<std::string> vegetation_types{"tree_cone", "tree_round", "bush"};

  // Illumination.
  RangeF sun_longitude{0.0f, 360.0f};  // degrees
  RangeF sun_latitude{8.0f, 70.0f};    // degrees above horizon
  RangeF sun_angular_radius{0.26f, 0.27f};
  RangeF sun_intensity{20000.0f, 60000.0f};  // peak sun radiance (green channel)
  RangeF cloud_cover{0.0f, 0.85f};

  // Street furniture.
  RangeI pole_count{2, 6};
  RangeI traffic_light_count{1, 4};
  RangeI traffic_sign_count{1, 6};
  float crosswalk_probability = 0.7f;

  // Ego camera.
  RangeF camera_height{1.3f, 1.7f};
  RangeF camera_fov{50.0f, 70.0f};       // vertical, degrees
  RangeF camera_speed{0.0f, 15.0f};      // m/s along the street
  RangeF exposure_time_ms{2.0f, 10.0f};  // motion blur span
  RangeF camera_exposure{0.9f, 1.1f};    // display exposure multiplier

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

// Built-in defaults (the values above).
ScenarioScope default_scope();

// JSON round trip; absent keys keep their defaults. Throws on malformed input.
ScenarioScope scope_from_json_text(const std::string& text);
std::string scope_to_json_text(const ScenarioScope& scope);
ScenarioScope load_scope_file(const std::string& path);

}  // namespace urbansynth
