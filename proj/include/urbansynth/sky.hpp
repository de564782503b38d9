#pragma once

#include <cstdint>

#include "urbansynth/rng.hpp"
#include "urbansynth/spectrum.hpp"
#include "urbansynth/vec.hpp"

namespace urbansynth {

// Parametric sun + sky environment. Analytic two-color gradient, an explicit
// sun disk, and a seeded value-noise cloud layer that attenuates the sun and
// modulates the gradient. All radiances are scene-referred linear RGB.
struct SunSky {
  float sun_longitude_deg = 120.0f;  // azimuth from +x, counterclockwise
  float sun_latitude_deg = 35.0f;    // elevation above the horizon
  float sun_angular_radius_deg = 0.265f;
  Spectrum sun_radiance{40000.0f, 36000.0f, 30000.0f};
  float cloud_cover = 0.0f;  // in [0, 1]
  Spectrum sky_zenith_radiance{0.18f, 0.28f, 0.55f};
  Spectrum sky_horizon_radiance{0.55f, 0.62f, 0.72f};
  uint32_t cloud_noise_seed = 0;

  // Uniform environment of radiance l in every direction (sun blended in).
  static SunSky uniform(const Spectrum& l) {
    SunSky s;
    s.sun_radiance = l;
    s.sky_zenith_radiance = l;
    s.sky_horizon_radiance = l;
    s.cloud_cover = 0.0f;
    return s;
  }
};

struct LightSample {
  Vec3 direction;     // unit, toward the light
  Spectrum radiance;  // incoming radiance from that direction
  float pdf = 0.0f;   // per solid angle
};

// Unit vector toward the sun: azimuth = longitude, elevation = latitude.
Vec3 sun_direction(const SunSky& sky);

float sun_cos_radius(const SunSky& sky);
// Solid angle of the sun cone: 2*pi*(1 - cos r).
float sun_solid_angle(const SunSky& sky);
bool in_sun_cone(const SunSky& sky, const Vec3& direction);

// Environment radiance for a world-space direction.
//
// Documented formula:
//   t        = max(direction.z, 0)
//   gradient = horizon + (zenith - horizon) * t
//   n        = value-noise cloud field (seeded), coverage ~ cloud_cover
//   cloudy   = lerp(gradient, gray(gradient) * (1.1 - 0.5*cover), 0.85 * mask)
//   disk     = lerp(sun_radiance, cloudy, cover)   within the sun cone
// Continuous everywhere except at the sun disk boundary.
Spectrum sky_radiance(const SunSky& sky, const Vec3& direction);

// Sky gradient + clouds only, without the sun disk.
Spectrum sky_radiance_no_sun(const SunSky& sky, const Vec3& direction);

// Uniform sample over the sun cone; pdf = 1 / sun_solid_angle.
LightSample sample_sun(const SunSky& sky, const Vec2& u);

}  // namespace urbansynth
