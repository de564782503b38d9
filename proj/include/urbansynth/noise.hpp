#pragma once

#include <cmath>
#include <cstdint>

#include "urbansynth/rng.hpp"

namespace urbansynth {

// Seeded lattice value noise, output in [0, 1]. Pure functions of the inputs.

inline float lattice_value(int32_t x, int32_t y, int32_t z, uint32_t seed) {
  uint64_t h = mix_bits((static_cast<uint64_t>(static_cast<uint32_t>(x)) << 40) ^
                        (static_cast<uint64_t>(static_cast<uint32_t>(y)) << 20) ^
                        static_cast<uint32_t>(z) ^ (static_cast<uint64_t>(seed) << 32));
  return static_cast<float>(h >> 40) * 0x1p-24f;
}

inline float smooth_step01(float t) { return t * t * (3.0f - 2.0f * t); }

inline float value_noise_3d(float x, float y, float z, uint32_t seed) {
  const float fx = std::floor(x), fy = std::floor(y), fz = std::floor(z);
  const int32_t ix = static_cast<int32_t>(fx), iy = static_cast<int32_t>(fy),
                iz = static_cast<int32_t>(fz);
  const float tx = smooth_step01(x - fx), ty = smooth_step01(y - fy), tz = smooth_step01(z - fz);

  float c[2][2][2];
  for (int dx = 0; dx < 2; ++dx)
    for (int dy = 0; dy < 2; ++dy)
      for (int dz = 0; dz < 2; ++dz) c[dx][dy][dz] = lattice_value(ix + dx, iy + dy, iz + dz, seed);

  auto mix1 = [](float a, float b, float t) { return a + (b - a) * t; };
  const float x00 = mix1(c[0][0][0], c[1][0][0], tx);
  const float x10 = mix1(c[0][1][0], c[1][1][0], tx);
  const float x01 = mix1(c[0][0][1], c[1][0][1], tx);
  const float x11 = mix1(c[0][1][1], c[1][1][1], tx);
  const float y0 = mix1(x00, x10, ty);
  const float y1 = mix1(x01, x11, ty);
  return mix1(y0, y1, tz);
}

inline float value_noise_2d(float x, float y, uint32_t seed) {
  return value_noise_3d(x, y, 0.5f, seed);
}

inline float fbm_3d(float x, float y, float z, uint32_t seed, int octaves) {
  float sum = 0.0f, amp = 0.5f, freq = 1.0f, norm = 0.0f;
  for (int i = 0; i < octaves; ++i) {
    sum += amp * value_noise_3d(x * freq, y * freq, z * freq, seed + 131u * i);
    norm += amp;
    amp *= 0.5f;
    freq *= 2.0f;
  }
  return sum / norm;
}

inline float fbm_2d(float x, float y, uint32_t seed, int octaves) {
  return fbm_3d(x, y, 0.5f, seed, octaves);
}

}  // namespace urbansynth
