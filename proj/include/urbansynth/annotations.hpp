#pragma once

#include <cstdint>
#include <vector>

#include "urbansynth/classes.hpp"
#include "urbansynth/scene.hpp"

namespace urbansynth {

struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> codes;  // class codes, row-major

  uint8_t at(int x, int y) const { return codes[static_cast<size_t>(y) * width + x]; }
};

struct InstanceMap {
  int width = 0;
  int height = 0;
  std::vector<uint32_t> codes;  // class_code * 1000 + instance_index

  uint32_t at(int x, int y) const { return codes[static_cast<size_t>(y) * width + x]; }
  uint32_t max_code() const;
};

struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<float> meters;  // along the camera ray; 0 = no hit

  float at(int x, int y) const { return meters[static_cast<size_t>(y) * width + x]; }
};

struct Annotations {
  LabelMap label;
  InstanceMap instance;
  DepthMap depth;
};

// Ground truth for the identical scene and camera as the beauty pass: one
// center ray per pixel at the shutter midpoint, no anti-aliasing, no motion
// blur, no PSF. Misses are sky / sky*1000 / depth 0.
Annotations render_annotations(const RenderScene& scene, const Camera& camera);

}  // namespace urbansynth
