#include "urbansynth/classes.hpp"

#include <stdexcept>

namespace urbansynth {

const std::array<std::string, kClassCount>& class_names() {
  static const std::array<std::string, kClassCount> names = {
      "road",    "sidewalk", "building",   "pole",  "traffic_light", "traffic_sign",
      "vegetation", "terrain", "sky",      "person", "rider",        "car",
      "truck",   "bus",      "motorcycle", "bicycle"};
  return names;
}

const std::array<std::array<uint8_t, 3>, kClassCount>& class_colors() {
  // Cityscapes display palette for the matching classes.
  static const std::array<std::array<uint8_t, 3>, kClassCount> colors = {{
      {128, 64, 128},   // road
      {244, 35, 232},   // sidewalk
      {70, 70, 70},     // building
      {153, 153, 153},  // pole
      {250, 170, 30},   // traffic_light
      {220, 220, 0},    // traffic_sign
      {107, 142, 35},   // vegetation
      {152, 251, 152},  // terrain
      {70, 130, 180},   // sky
      {220, 20, 60},    // person
      {255, 0, 0},      // rider
      {0, 0, 142},      // car
      {0, 0, 70},       // truck
      {0, 60, 100},     // bus
      {0, 0, 230},      // motorcycle
      {119, 11, 32},    // bicycle
  }};
  return colors;
}

ClassId class_from_name(const std::string& name) {
  const auto& names = class_names();
  for (int i = 0; i < kClassCount; ++i) {
    if (names[i] == name) return static_cast<ClassId>(i);
  }
  throw std::invalid_argument("unknown class name: " + name);
}

bool is_countable(ClassId c) {
  switch (c) {
    case ClassId::person:
    case ClassId::rider:
    case ClassId::car:
    case ClassId::truck:
    case ClassId::bus:
    case ClassId::motorcycle:
    case ClassId::bicycle:
    case ClassId::traffic_light:
    case ClassId::traffic_sign:
    case ClassId::pole:
      return true;
    default:
      return false;
  }
}

}  // namespace urbansynth
