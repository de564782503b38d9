#include "urbansynth/scope.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace urbansynth {

using nlohmann::ordered_json;

void ScenarioScope::validate() const {
  auto check_f = [](const RangeF& r, const char* name) {
    if (!(r.lo <= r.hi)) throw std::invalid_argument(std::string("scope: ") + name + ": min > max");
  };
  auto check_i = [](const RangeI& r, const char* name) {
    if (r.lo > r.hi) throw std::invalid_argument(std::string("scope: ") + name + ": min > max");
    if (r.lo < 0) throw std::invalid_argument(std::string("scope: ") + name + ": negative count");
  };
  check_f(road_width, "road.width");
  check_i(lane_count, "road.lanes");
  if (lane_count.lo < 1) throw std::invalid_argument("scope: road.lanes: at least one lane");
  if (road_materials.empty()) throw std::invalid_argument("scope: road.materials: empty set");
  check_f(crack_density, "road.crack_density");
  check_f(repair_density, "road.repair_density");
  check_f(sidewalk_width, "sidewalk.width");
  if (sidewalk_width.lo < 0.5f)
    throw std::invalid_argument("scope: sidewalk.width: below 0.5 m");
  check_f(curb_height, "sidewalk.curb_height");
  if (curb_height.lo < 0.0f) throw std::invalid_argument("scope: sidewalk.curb_height: negative");
  if (sidewalk_materials.empty())
    throw std::invalid_argument("scope: sidewalk.materials: empty set");
  check_f(dirt_amount, "sidewalk.dirt_amount");
  check_f(building_height, "building.height");
  check_f(building_width, "building.width");
  if (building_width.lo < 3.0f) throw std::invalid_argument("scope: building.width: below 3 m");
  check_f(building_depth, "building.depth");
  check_f(window_height, "building.window_height");
  check_f(window_width, "building.window_width");
  check_f(window_depth, "building.window_depth");
  if (building_materials.empty())
    throw std::invalid_argument("scope: building.materials: empty set");
  check_f(building_fraction, "building.fraction");
  check_i(car_count, "car.count");
  check_i(truck_count, "car.truck_count");
  check_i(bus_count, "car.bus_count");
  check_i(motorcycle_count, "car.motorcycle_count");
  if (car_placement.empty()) throw std::invalid_argument("scope: car.placement: empty set");
  for (const auto& p : car_placement)
    if (p != "lane" && p != "parked")
      throw std::invalid_argument("scope: car.placement: unknown rule '" + p + "'");
  if (car_colors.empty()) throw std::invalid_argument("scope: car.colors: empty set");
  check_i(pedestrian_count, "pedestrian.count");
  if (pedestrian_placement.empty())
    throw std::invalid_argument("scope: pedestrian.placement: empty set");
  for (const auto& p : pedestrian_placement)
    if (p != "sidewalk" && p != "crosswalk" && p != "road")
      throw std::invalid_argument("scope: pedestrian.placement: unknown rule '" + p + "'");
  check_i(rider_count, "rider.count");
  check_i(vegetation_count, "vegetation.count");
  if (vegetation_types.empty())
    throw std::invalid_argument("scope: vegetation.types: empty set");
  check_f(sun_longitude, "sun.longitude");
  check_f(sun_latitude, "sun.latitude");
  if (sun_latitude.lo < 1.0f)
    throw std::invalid_argument("scope: sun.latitude: below 1 degree");
  check_f(sun_angular_radius, "sun.angular_radius");
  check_f(sun_intensity, "sun.intensity");
  check_f(cloud_cover, "cloud.cover");
  if (cloud_cover.lo < 0.0f || cloud_cover.hi > 1.0f)
    throw std::invalid_argument("scope: cloud.cover: outside [0, 1]");
  check_i(pole_count, "misc.poles");
  check_i(traffic_light_count, "misc.traffic_lights");
  check_i(traffic_sign_count, "misc.traffic_signs");
  if (crosswalk_probability < 0.0f || crosswalk_probability > 1.0f)
    throw std::invalid_argument("scope: misc.crosswalk_probability: outside [0, 1]");
  check_f(camera_height, "camera.height");
  check_f(camera_fov, "camera.fov");
  if (camera_fov.lo <= 0.0f || camera_fov.hi >= 180.0f)
    throw std::invalid_argument("scope: camera.fov: outside (0, 180)");
  check_f(camera_speed, "camera.speed");
  check_f(exposure_time_ms, "camera.exposure_time_ms");
  check_f(camera_exposure, "camera.exposure");
}

ScenarioScope default_scope() { return ScenarioScope{}; }

namespace {

ordered_json range_json(const RangeF& r) { return ordered_json::array({r.lo, r.hi}); }
ordered_json range_json(const RangeI& r) { return ordered_json::array({r.lo, r.hi}); }

void read_range(const ordered_json& section, const char* key, RangeF& out) {
  if (!section.contains(key)) return;
  const auto& j = section.at(key);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(std::string("scope: ") + key + ": expected [min, max]");
  out = {j[0].get<float>(), j[1].get<float>()};
}

void read_range(const ordered_json& section, const char* key, RangeI& out) {
  if (!section.contains(key)) return;
  const auto& j = section.at(key);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(std::string("scope: ") + key + ": expected [min, max]");
  out = {j[0].get<int>(), j[1].get<int>()};
}

void read_strings(const ordered_json& section, const char* key, std::vector<std::string>& out) {
  if (!section.contains(key)) return;
  out = section.at(key).get<std::vector<std::string>>();
}

}  // namespace

ScenarioScope scope_from_json_text(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  ScenarioScope s = default_scope();

  if (j.contains("road")) {
    const auto& r = j["road"];
    read_range(r, "width", s.road_width);
    read_range(r, "lanes", s.lane_count);
    read_strings(r, "materials", s.road_materials);
    read_range(r, "crack_density", s.crack_density);
    read_range(r, "repair_density", s.repair_density);
  }
  if (j.contains("sidewalk")) {
    const auto& r = j["sidewalk"];
    read_range(r, "width", s.sidewalk_width);
    read_range(r, "curb_height", s.curb_height);
    read_strings(r, "materials", s.sidewalk_materials);
    read_range(r, "dirt_amount", s.dirt_amount);
  }
  if (j.contains("building")) {
    const auto& r = j["building"];
    read_range(r, "height", s.building_height);
    read_range(r, "width", s.building_width);
    read_range(r, "depth", s.building_depth);
    read_range(r, "window_height", s.window_height);
    read_range(r, "window_width", s.window_width);
    read_range(r, "window_depth", s.window_depth);
    read_strings(r, "materials", s.building_materials);
    read_range(r, "fraction", s.building_fraction);
  }
  if (j.contains("car")) {
    const auto& r = j["car"];
    read_range(r, "count", s.car_count);
    read_range(r, "truck_count", s.truck_count);
    read_range(r, "bus_count", s.bus_count);
    read_range(r, "motorcycle_count", s.motorcycle_count);
    read_strings(r, "placement", s.car_placement);
    if (r.contains("colors")) {
      s.car_colors.clear();
      for (const auto& c : r.at("colors"))
        s.car_colors.push_back({c[0].get<float>(), c[1].get<float>(), c[2].get<float>()});
    }
  }
  if (j.contains("pedestrian")) {
    const auto& r = j["pedestrian"];
    read_range(r, "count", s.pedestrian_count);
    read_strings(r, "placement", s.pedestrian_placement);
  }
  if (j.contains("rider")) read_range(j["rider"], "count", s.rider_count);
  if (j.contains("vegetation")) {
    const auto& r = j["vegetation"];
    read_range(r, "count", s.vegetation_count);
    read_strings(r, "types", s.vegetation_types);
  }
  if (j.contains("sun")) {
    const auto& r = j["sun"];
    read_range(r, "longitude", s.sun_longitude);
    read_range(r, "latitude", s.sun_latitude);
    read_range(r, "angular_radius", s.sun_angular_radius);
    read_range(r, "intensity", s.sun_intensity);
  }
  if (j.contains("cloud")) read_range(j["cloud"], "cover", s.cloud_cover);
  if (j.contains("misc")) {
    const auto& r = j["misc"];
    read_range(r, "poles", s.pole_count);
    read_range(r, "traffic_lights", s.traffic_light_count);
    read_range(r, "traffic_signs", s.traffic_sign_count);
    if (r.contains("crosswalk_probability"))
      s.crosswalk_probability = r.at("crosswalk_probability").get<float>();
  }
  if (j.contains("camera")) {
    const auto& r = j["camera"];
    read_range(r, "height", s.camera_height);
    read_range(r, "fov", s.camera_fov);
    read_range(r, "speed", s.camera_speed);
    read_range(r, "exposure_time_ms", s.exposure_time_ms);
    read_range(r, "exposure", s.camera_exposure);
  }

  s.validate();
  return s;
}

std::string scope_to_json_text(const ScenarioScope& s) {
  ordered_json j;
  j["road"] = {{"width", range_json(s.road_width)},
               {"lanes", range_json(s.lane_count)},
               {"materials", s.road_materials},
               {"crack_density", range_json(s.crack_density)},
               {"repair_density", range_json(s.repair_density)}};
  j["sidewalk"] = {{"width", range_json(s.sidewalk_width)},
                   {"curb_height", range_json(s.curb_height)},
                   {"materials", s.sidewalk_materials},
                   {"dirt_amount", range_json(s.dirt_amount)}};
  j["building"] = {{"height", range_json(s.building_height)},
                   {"width", range_json(s.building_width)},
                   {"depth", range_json(s.building_depth)},
                   {"window_height", range_json(s.window_height)},
                   {"window_width", range_json(s.window_width)},
                   {"window_depth", range_json(s.window_depth)},
                   {"materials", s.building_materials},
                   {"fraction", range_json(s.building_fraction)}};
  ordered_json colors = ordered_json::array();
  for (const auto& c : s.car_colors) colors.push_back({c.r, c.g, c.b});
  j["car"] = {{"count", range_json(s.car_count)},
              {"truck_count", range_json(s.truck_count)},
              {"bus_count", range_json(s.bus_count)},
              {"motorcycle_count", range_json(s.motorcycle_count)},
              {"placement", s.car_placement},
              {"colors", colors}};
  j["pedestrian"] = {{"count", range_json(s.pedestrian_count)},
                     {"placement", s.pedestrian_placement}};
  j["rider"] = {{"count", range_json(s.rider_count)}};
  j["vegetation"] = {{"count", range_json(s.vegetation_count)}, {"types", s.vegetation_types}};
  j["sun"] = {{"longitude", range_json(s.sun_longitude)},
              {"latitude", range_json(s.sun_latitude)},
              {"angular_radius", range_json(s.sun_angular_radius)},
              {"intensity", range_json(s.sun_intensity)}};
  j["cloud"] = {{"cover", range_json(s.cloud_cover)}};
  j["misc"] = {{"poles", range_json(s.pole_count)},
               {"traffic_lights", range_json(s.traffic_light_count)},
               {"traffic_signs", range_json(s.traffic_sign_count)},
               {"crosswalk_probability", s.crosswalk_probability}};
  j["camera"] = {{"height", range_json(s.camera_height)},
                 {"fov", range_json(s.camera_fov)},
                 {"speed", range_json(s.camera_speed)},
                 {"exposure_time_ms", range_json(s.exposure_time_ms)},
                 {"exposure", range_json(s.camera_exposure)}};
  return j.dump(2);
}

ScenarioScope load_scope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scope file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return scope_from_json_text(buf.str());
}

}  // namespace urbansynth
