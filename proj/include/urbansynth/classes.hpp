#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace urbansynth {

// The 16 semantic classes emitted by the generator, in canonical code order.
// Code 255 is reserved for void and is never produced by the generator; it is
// only honored when reading external ground truth.
enum class ClassId : uint8_t {
  road = 0,
  sidewalk = 1,
  building = 2,
  pole = 3,
  traffic_light = 4,
  traffic_sign = 5,
  vegetation = 6,
  terrain = 7,
  sky = 8,
  person = 9,
  rider = 10,
  car = 11,
  truck = 12,
  bus = 13,
  motorcycle = 14,
  bicycle = 15,
};

constexpr int kClassCount = 16;
constexpr uint8_t kVoidCode = 255;

inline uint8_t class_code(ClassId c) { return static_cast<uint8_t>(c); }

const std::array<std::string, kClassCount>& class_names();
const std::array<std::array<uint8_t, 3>, kClassCount>& class_colors();

// Name lookup; throws std::invalid_argument for unknown names.
ClassId class_from_name(const std::string& name);

// Classes whose instances are individually counted in the instance map.
bool is_countable(ClassId c);

// Instance map encoding: class_code * 1000 + instance_index for countable
// classes; class_code * 1000 otherwise.
constexpr uint32_t kInstanceStride = 1000;
inline uint32_t instance_code(ClassId c, uint32_t index) {
  return static_cast<uint32_t>(class_code(c)) * kInstanceStride + index;
}
inline uint8_t instance_code_class(uint32_t code) {
  return static_cast<uint8_t>(code / kInstanceStride);
}

}  // namespace urbansynth
