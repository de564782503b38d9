#pragma once

#include <cstdint>

#include "urbansynth/vec.hpp"

namespace urbansynth {

// SplitMix64 finalizer. Full-avalanche over the 64-bit input.
inline uint64_t mix_bits(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  return mix_bits(a + 0x9e3779b97f4a7c15ull * (b + 1));
}

// Counter-based stream: the n-th value is a pure function of (seed, stream, n).
// Streams with distinct keys are independent, so consumers can key them by
// role (pixel, sample, parameter index) without any shared state.
class RandomStream {
 public:
  RandomStream() : key_(0) {}
  RandomStream(uint64_t seed, uint64_t stream) : key_(hash_combine(mix_bits(seed), stream)) {}

  uint64_t next_u64() { return mix_bits(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }
  uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

  // Uniform in [0, 1), 24 bits of mantissa so 1.0 is never produced.
  float next_float() { return static_cast<float>(next_u64() >> 40) * 0x1p-24f; }
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

  Vec2 next_float2() {
    const float a = next_float();
    const float b = next_float();
    return {a, b};
  }

  float next_in(float lo, float hi) { return lo + (hi - lo) * next_float(); }

  // Uniform integer in [lo, hi] inclusive.
  int64_t next_int(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// Stream key for per-sample renderer streams. Layout bounds: x, y < 2^20,
// sample index < 2^20.
inline uint64_t pixel_sample_stream(uint32_t x, uint32_t y, uint32_t sample) {
  return (static_cast<uint64_t>(y) << 40) | (static_cast<uint64_t>(x) << 20) | sample;
}

}  // namespace urbansynth
