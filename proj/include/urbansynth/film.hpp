#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "urbansynth/spectrum.hpp"

namespace urbansynth {

// Per-pixel radiance accumulator. Non-finite samples are rejected at splat
// time and counted instead of accumulated.
class HdrFilm {
 public:
  HdrFilm() = default;
  HdrFilm(int width, int height)
      : width_(width), height_(height), sum_(3 * static_cast<size_t>(width) * height, 0.0),
        count_(static_cast<size_t>(width) * height, 0) {}

  HdrFilm(const HdrFilm& o)
      : width_(o.width_), height_(o.height_), sum_(o.sum_), count_(o.count_),
        rejected_(o.rejected_.load()) {}
  HdrFilm& operator=(const HdrFilm& o) {
    width_ = o.width_;
    height_ = o.height_;
    sum_ = o.sum_;
    count_ = o.count_;
    rejected_.store(o.rejected_.load());
    return *this;
  }

  int width() const { return width_; }
  int height() const { return height_; }

  void add_sample(int x, int y, const Spectrum& s) {
    if (!s.is_finite() || s.r < 0.0f || s.g < 0.0f || s.b < 0.0f) {
      rejected_.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    const size_t i = static_cast<size_t>(y) * width_ + x;
    sum_[3 * i] += s.r;
    sum_[3 * i + 1] += s.g;
    sum_[3 * i + 2] += s.b;
    count_[i]++;
  }

  // Mean radiance; zero where no sample landed.
  Spectrum pixel(int x, int y) const {
    const size_t i = static_cast<size_t>(y) * width_ + x;
    if (count_[i] == 0) return Spectrum(0.0f);
    const double inv = 1.0 / count_[i];
    return {static_cast<float>(sum_[3 * i] * inv), static_cast<float>(sum_[3 * i + 1] * inv),
            static_cast<float>(sum_[3 * i + 2] * inv)};
  }

  void set_pixel(int x, int y, const Spectrum& s) {
    const size_t i = static_cast<size_t>(y) * width_ + x;
    sum_[3 * i] = s.r;
    sum_[3 * i + 1] = s.g;
    sum_[3 * i + 2] = s.b;
    count_[i] = 1;
  }

  uint32_t sample_count(int x, int y) const { return count_[static_cast<size_t>(y) * width_ + x]; }
  uint64_t rejected_count() const { return rejected_.load(); }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> sum_;
  std::vector<uint32_t> count_;
  std::atomic<uint64_t> rejected_{0};
};

}  // namespace urbansynth
