#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "urbansynth/film.hpp"
#include "urbansynth/postprocess.hpp"

namespace urbansynth {

struct GrayImage8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;
};

struct GrayImage16 {
  int width = 0;
  int height = 0;
  std::vector<uint16_t> data;
};

// PNG, via libpng with fixed compression settings: identical input always
// produces identical bytes.
void write_png_rgb8(const std::string& path, const ImageU8& image);
void write_png_gray8(const std::string& path, int width, int height,
                     const std::vector<uint8_t>& data);
void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<uint16_t>& data);

GrayImage8 read_png_gray8(const std::string& path);
GrayImage16 read_png_gray16(const std::string& path);

// Portable float map, little-endian (negative scale), rows bottom-to-top.
// "Pf" single channel; "PF" three channels of the film's per-pixel means.
void write_pfm_depth(const std::string& path, int width, int height,
                     const std::vector<float>& values);
void write_pfm_rgb(const std::string& path, const HdrFilm& film);
std::vector<float> read_pfm_depth(const std::string& path, int& width, int& height);

// Raw 32-bit map for instance codes >= 65536: magic "USIR", u32 width, u32
// height, then row-major little-endian u32 codes.
void write_raw32(const std::string& path, int width, int height,
                 const std::vector<uint32_t>& codes);
std::vector<uint32_t> read_raw32(const std::string& path, int& width, int& height);

}  // namespace urbansynth
