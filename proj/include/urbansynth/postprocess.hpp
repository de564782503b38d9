#pragma once

#include <cstdint>
#include <vector>

#include "urbansynth/camera.hpp"
#include "urbansynth/film.hpp"

namespace urbansynth {

// 8-bit display-referred RGB image, row-major, interleaved.
struct ImageU8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;  // 3 * width * height

  uint8_t* pixel(int x, int y) { return data.data() + 3 * (static_cast<size_t>(y) * width + x); }
  const uint8_t* pixel(int x, int y) const {
    return data.data() + 3 * (static_cast<size_t>(y) * width + x);
  }
};

// Convolves the film with the PSF kernel. The kernel is normalized, and at
// image borders it is renormalized over the in-bounds support, which keeps a
// constant image exactly constant. The result stores one value per pixel.
HdrFilm apply_psf(const HdrFilm& film, const Psf& psf);

// Display encoding: code = round(255 * clamp(exposure * linear, 0, 1)^(1/2.4)).
// Monotone per channel.
ImageU8 tonemap(const HdrFilm& film, float exposure);

// The scalar transfer function used by tonemap, exposed for tests and tools.
uint8_t encode_display_value(float linear);

}  // namespace urbansynth
