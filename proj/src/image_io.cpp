#include "urbansynth/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace urbansynth {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

void write_png(const std::string& path, int width, int height, int bit_depth, int color_type,
               const std::vector<png_bytep>& rows) {
  FilePtr file = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png write failed: " + path);
  }
  png_init_io(png, file.get());
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);  // data is host (little) endian
  png_write_image(png, const_cast<png_bytepp>(rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

void read_png(const std::string& path, int expected_bit_depth, int& width, int& height,
              std::vector<std::vector<png_byte>>& rows) {
  FilePtr file = open_file(path, "rb");
  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8))
    throw std::runtime_error("not a PNG file: " + path);

  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png) throw std::runtime_error("png_create_read_struct failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw std::runtime_error("png_create_info_struct failed");
  if (setjmp(png_jmpbuf(r.png))) throw std::runtime_error("png read failed: " + path);

  png_init_io(r.png, file.get());
  png_set_sig_bytes(r.png, 8);
  png_read_info(r.png, r.info);

  width = static_cast<int>(png_get_image_width(r.png, r.info));
  height = static_cast<int>(png_get_image_height(r.png, r.info));
  const int bit_depth = png_get_bit_depth(r.png, r.info);
  const int color_type = png_get_color_type(r.png, r.info);

  if (color_type != PNG_COLOR_TYPE_GRAY)
    throw std::runtime_error(path + ": expected a single-channel (grayscale) PNG");
  if (bit_depth != expected_bit_depth)
    throw std::runtime_error(path + ": expected bit depth " +
                             std::to_string(expected_bit_depth) + ", found " +
                             std::to_string(bit_depth));
  if (bit_depth == 16) png_set_swap(r.png);

  rows.assign(height, std::vector<png_byte>(png_get_rowbytes(r.png, r.info)));
  std::vector<png_bytep> row_ptrs(height);
  for (int y = 0; y < height; ++y) row_ptrs[y] = rows[y].data();
  png_read_image(r.png, row_ptrs.data());
  png_read_end(r.png, nullptr);
}

}  // namespace

void write_png_rgb8(const std::string& path, const ImageU8& image) {
  std::vector<png_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y)
    rows[y] = const_cast<png_bytep>(image.data.data() + 3 * static_cast<size_t>(y) * image.width);
  write_png(path, image.width, image.height, 8, PNG_COLOR_TYPE_RGB, rows);
}

void write_png_gray8(const std::string& path, int width, int height,
                     const std::vector<uint8_t>& data) {
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(data.data() + static_cast<size_t>(y) * width);
  write_png(path, width, height, 8, PNG_COLOR_TYPE_GRAY, rows);
}

void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<uint16_t>& data) {
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(
        reinterpret_cast<const png_byte*>(data.data() + static_cast<size_t>(y) * width));
  write_png(path, width, height, 16, PNG_COLOR_TYPE_GRAY, rows);
}

GrayImage8 read_png_gray8(const std::string& path) {
  GrayImage8 img;
  std::vector<std::vector<png_byte>> rows;
  read_png(path, 8, img.width, img.height, rows);
  img.data.reserve(static_cast<size_t>(img.width) * img.height);
  for (const auto& row : rows) img.data.insert(img.data.end(), row.begin(), row.begin() + img.width);
  return img;
}

GrayImage16 read_png_gray16(const std::string& path) {
  GrayImage16 img;
  std::vector<std::vector<png_byte>> rows;
  read_png(path, 16, img.width, img.height, rows);
  img.data.resize(static_cast<size_t>(img.width) * img.height);
  for (int y = 0; y < img.height; ++y)
    std::memcpy(img.data.data() + static_cast<size_t>(y) * img.width, rows[y].data(),
                static_cast<size_t>(img.width) * 2);
  return img;
}

void write_pfm_depth(const std::string& path, int width, int height,
                     const std::vector<float>& values) {
  FilePtr file = open_file(path, "wb");
  std::fprintf(file.get(), "Pf\n%d %d\n-1.0\n", width, height);
  for (int y = height - 1; y >= 0; --y) {
    if (std::fwrite(values.data() + static_cast<size_t>(y) * width, sizeof(float), width,
                    file.get()) != static_cast<size_t>(width))
      throw std::runtime_error("pfm write failed: " + path);
  }
}

void write_pfm_rgb(const std::string& path, const HdrFilm& film) {
  FilePtr file = open_file(path, "wb");
  std::fprintf(file.get(), "PF\n%d %d\n-1.0\n", film.width(), film.height());
  std::vector<float> row(3 * static_cast<size_t>(film.width()));
  for (int y = film.height() - 1; y >= 0; --y) {
    for (int x = 0; x < film.width(); ++x) {
      const Spectrum p = film.pixel(x, y);
      row[3 * x] = p.r;
      row[3 * x + 1] = p.g;
      row[3 * x + 2] = p.b;
    }
    if (std::fwrite(row.data(), sizeof(float), row.size(), file.get()) != row.size())
      throw std::runtime_error("pfm write failed: " + path);
  }
}

std::vector<float> read_pfm_depth(const std::string& path, int& width, int& height) {
  FilePtr file = open_file(path, "rb");
  char magic[3] = {};
  float scale = 0;
  if (std::fscanf(file.get(), "%2s", magic) != 1 || std::strcmp(magic, "Pf") != 0)
    throw std::runtime_error(path + ": not a single-channel PFM");
  if (std::fscanf(file.get(), "%d %d %f", &width, &height, &scale) != 3 || scale >= 0.0f)
    throw std::runtime_error(path + ": bad PFM header (expect little-endian scale)");
  std::fgetc(file.get());  // single whitespace after the header
  std::vector<float> values(static_cast<size_t>(width) * height);
  for (int y = height - 1; y >= 0; --y) {
    if (std::fread(values.data() + static_cast<size_t>(y) * width, sizeof(float), width,
                   file.get()) != static_cast<size_t>(width))
      throw std::runtime_error(path + ": truncated PFM");
  }
  return values;
}

void write_raw32(const std::string& path, int width, int height,
                 const std::vector<uint32_t>& codes) {
  FilePtr file = open_file(path, "wb");
  const uint32_t header[3] = {0x52495355u /* "USIR" */, static_cast<uint32_t>(width),
                              static_cast<uint32_t>(height)};
  if (std::fwrite(header, sizeof(uint32_t), 3, file.get()) != 3 ||
      std::fwrite(codes.data(), sizeof(uint32_t), codes.size(), file.get()) != codes.size())
    throw std::runtime_error("raw32 write failed: " + path);
}

std::vector<uint32_t> read_raw32(const std::string& path, int& width, int& height) {
  FilePtr file = open_file(path, "rb");
  uint32_t header[3];
  if (std::fread(header, sizeof(uint32_t), 3, file.get()) != 3 || header[0] != 0x52495355u)
    throw std::runtime_error(path + ": not a raw32 instance map");
  width = static_cast<int>(header[1]);
  height = static_cast<int>(header[2]);
  std::vector<uint32_t> codes(static_cast<size_t>(width) * height);
  if (std::fread(codes.data(), sizeof(uint32_t), codes.size(), file.get()) != codes.size())
    throw std::runtime_error(path + ": truncated raw32 instance map");
  return codes;
}

}  // namespace urbansynth
