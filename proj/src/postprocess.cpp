#include "urbansynth/postprocess.hpp"

#include <cmath>

namespace urbansynth {

namespace {

// Renormalized separable convolution along one axis.
void convolve_axis(const std::vector<Spectrum>& src, std::vector<Spectrum>& dst, int width,
                   int height, const std::vector<float>& kernel, bool horizontal) {
  const int radius = static_cast<int>(kernel.size()) / 2;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      Spectrum acc(0.0f);
      float norm = 0.0f;
      for (int k = -radius; k <= radius; ++k) {
        const int sx = horizontal ? x + k : x;
        const int sy = horizontal ? y : y + k;
        if (sx < 0 || sx >= width || sy < 0 || sy >= height) continue;
        const float w = kernel[k + radius];
        acc += src[static_cast<size_t>(sy) * width + sx] * w;
        norm += w;
      }
      dst[static_cast<size_t>(y) * width + x] = acc * (1.0f / norm);
    }
  }
}

}  // namespace

HdrFilm apply_psf(const HdrFilm& film, const Psf& psf) {
  const int width = film.width();
  const int height = film.height();

  if (psf.kind == Psf::Kind::none) return film;

  std::vector<Spectrum> src(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) src[static_cast<size_t>(y) * width + x] = film.pixel(x, y);

  std::vector<Spectrum> out(src.size());

  if (psf.kind == Psf::Kind::gaussian) {
    const float sigma = std::fmax(psf.sigma_px, 1e-3f);
    const int radius = static_cast<int>(std::ceil(3.0f * sigma));
    std::vector<float> kernel(2 * radius + 1);
    float sum = 0.0f;
    for (int k = -radius; k <= radius; ++k) {
      kernel[k + radius] = std::exp(-0.5f * k * k / (sigma * sigma));
      sum += kernel[k + radius];
    }
    for (float& w : kernel) w /= sum;

    std::vector<Spectrum> tmp(src.size());
    convolve_axis(src, tmp, width, height, kernel, true);
    convolve_axis(tmp, out, width, height, kernel, false);
  } else {
    // Halo: (1 - weight) * identity + weight * uniform disk.
    const int radius = std::max(1, static_cast<int>(std::lround(psf.radius_px)));
    std::vector<std::pair<int, int>> disk;
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx)
        if (dx * dx + dy * dy <= radius * radius) disk.emplace_back(dx, dy);

    const float w_halo = clampf(psf.weight, 0.0f, 1.0f);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        Spectrum acc(0.0f);
        int inside = 0;
        for (const auto& [dx, dy] : disk) {
          const int sx = x + dx, sy = y + dy;
          if (sx < 0 || sx >= width || sy < 0 || sy >= height) continue;
          acc += src[static_cast<size_t>(sy) * width + sx];
          inside++;
        }
        const Spectrum center = src[static_cast<size_t>(y) * width + x];
        out[static_cast<size_t>(y) * width + x] =
            center * (1.0f - w_halo) + acc * (w_halo / inside);
      }
    }
  }

  HdrFilm result(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) result.set_pixel(x, y, out[static_cast<size_t>(y) * width + x]);
  return result;
}

uint8_t encode_display_value(float linear) {
  const float v = clampf(linear, 0.0f, 1.0f);
  return static_cast<uint8_t>(std::lround(255.0f * std::pow(v, 1.0f / 2.4f)));
}

ImageU8 tonemap(const HdrFilm& film, float exposure) {
  ImageU8 img;
  img.width = film.width();
  img.height = film.height();
  img.data.resize(3 * static_cast<size_t>(img.width) * img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const Spectrum p = film.pixel(x, y);
      uint8_t* px = img.pixel(x, y);
      px[0] = encode_display_value(exposure * p.r);
      px[1] = encode_display_value(exposure * p.g);
      px[2] = encode_display_value(exposure * p.b);
    }
  }
  return img;
}

}  // namespace urbansynth
