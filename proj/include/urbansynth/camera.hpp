#pragma once

#include <cstdint>

#include "urbansynth/geometry.hpp"
#include "urbansynth/transform.hpp"

namespace urbansynth {

// Image-space point spread function applied after rendering.
struct Psf {
  enum class Kind : uint8_t { none, gaussian, halo };
  Kind kind = Kind::none;
  float sigma_px = 0.6f;   // gaussian
  float weight = 0.1f;     // halo: energy fraction spread into the disk
  float radius_px = 8.0f;  // halo

  static Psf none() { return {}; }
  static Psf gaussian(float sigma) { return {Kind::gaussian, sigma, 0.0f, 0.0f}; }
  static Psf halo(float weight, float radius) { return {Kind::halo, 0.0f, weight, radius}; }
};

// Pinhole camera. Pose columns are (right, up, forward); pixel (0,0) is the
// top-left corner, +x right, +y down. The pose is interpolated linearly over
// the shutter interval for motion blur.
struct Camera {
  RigidTransform pose = RigidTransform::identity();
  RigidTransform pose_at_shutter_end = RigidTransform::identity();
  float vertical_fov_deg = 60.0f;
  int width = 960;
  int height = 540;
  float shutter_open = 0.0f;   // normalized [0, 1]
  float shutter_close = 0.0f;  // == shutter_open disables motion blur
  float exposure = 1.0f;
  Psf psf;

  // subpixel in [0,1)^2 within the pixel; time_u in [0,1) maps into the
  // shutter interval.
  Ray generate_ray(int px, int py, const Vec2& subpixel, float time_u) const;

  // Pixel-center ray at the shutter midpoint (annotation convention).
  Ray center_ray(int px, int py) const { return generate_ray(px, py, {0.5f, 0.5f}, 0.5f); }
};

}  // namespace urbansynth
