#include "urbansynth/sky.hpp"

#include "urbansynth/noise.hpp"

namespace urbansynth {

Vec3 sun_direction(const SunSky& sky) {
  const float az = radians(sky.sun_longitude_deg);
  const float el = radians(sky.sun_latitude_deg);
  const float ce = std::cos(el);
  return {ce * std::cos(az), ce * std::sin(az), std::sin(el)};
}

float sun_cos_radius(const SunSky& sky) {
  const float r = std::fmax(radians(sky.sun_angular_radius_deg), 1e-4f);
  return std::cos(r);
}

float sun_solid_angle(const SunSky& sky) { return kTwoPi * (1.0f - sun_cos_radius(sky)); }

bool in_sun_cone(const SunSky& sky, const Vec3& direction) {
  return dot(direction, sun_direction(sky)) >= sun_cos_radius(sky);
}

namespace {

float cloud_mask(const SunSky& sky, const Vec3& d) {
  if (sky.cloud_cover <= 0.0f || d.z <= 0.0f) return 0.0f;
  // Perspective projection of the direction onto a virtual cloud plane, so
  // features compress toward the horizon.
  const float px = d.x / (d.z + 0.25f);
  const float py = d.y / (d.z + 0.25f);
  const float n = fbm_2d(px * 1.5f, py * 1.5f, sky.cloud_noise_seed, 4);
  // Coverage fraction tracks cloud_cover: mask turns on where n exceeds the
  // (1 - cover) quantile of the noise field.
  return clampf((n - (1.0f - sky.cloud_cover)) / std::fmax(sky.cloud_cover, 1e-6f), 0.0f, 1.0f);
}

}  // namespace

Spectrum sky_radiance_no_sun(const SunSky& sky, const Vec3& d) {
  const float t = std::fmax(d.z, 0.0f);
  const Spectrum gradient = sky.sky_horizon_radiance +
                            (sky.sky_zenith_radiance - sky.sky_horizon_radiance) * t;
  const float mask = cloud_mask(sky, d);
  if (mask <= 0.0f) return gradient;
  const Spectrum cloud = Spectrum(gradient.luminance()) * (1.1f - 0.5f * sky.cloud_cover);
  return lerp(gradient, cloud, 0.85f * mask);
}

Spectrum sky_radiance(const SunSky& sky, const Vec3& d) {
  const Spectrum base = sky_radiance_no_sun(sky, d);
  if (dot(d, sun_direction(sky)) >= sun_cos_radius(sky)) {
    // Exact at both endpoints: full cover leaves only the cloud layer.
    return sky.sun_radiance * (1.0f - sky.cloud_cover) + base * sky.cloud_cover;
  }
  return base;
}

LightSample sample_sun(const SunSky& sky, const Vec2& u) {
  const float cos_r = sun_cos_radius(sky);
  const float cos_theta = 1.0f - u.x * (1.0f - cos_r);
  const float sin_theta = std::sqrt(std::fmax(0.0f, 1.0f - cos_theta * cos_theta));
  const float phi = kTwoPi * u.y;

  const Vec3 w = sun_direction(sky);
  Vec3 t, b;
  orthonormal_basis(w, t, b);
  LightSample s;
  s.direction =
      normalize(t * (sin_theta * std::cos(phi)) + b * (sin_theta * std::sin(phi)) + w * cos_theta);
  s.pdf = 1.0f / sun_solid_angle(sky);
  s.radiance = sky_radiance(sky, s.direction);
  return s;
}

}  // namespace urbansynth
