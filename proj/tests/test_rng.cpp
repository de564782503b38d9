#include <set>

#include "doctest.h"
#include "urbansynth/rng.hpp"

using namespace urbansynth;

TEST_CASE("streams are deterministic") {
  RandomStream a(42, 7);
  RandomStream b(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different stream keys decorrelate") {
  RandomStream a(42, 7);
  RandomStream b(42, 8);
  RandomStream c(43, 7);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const uint64_t va = a.next_u64();
    if (va == b.next_u64()) same_ab++;
    if (va == c.next_u64()) same_ac++;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("floats stay in [0, 1) with a sane mean") {
  RandomStream rng(1, 0);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const float v = rng.next_float();
    CHECK(v >= 0.0f);
    CHECK(v < 1.0f);
    sum += v;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("integer ranges are inclusive and covered") {
  RandomStream rng(2, 0);
  std::set<int64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const int64_t v = rng.next_int(3, 7);
    CHECK(v >= 3);
    CHECK(v <= 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("pixel/sample stream keys are unique across a frame") {
  std::set<uint64_t> keys;
  for (uint32_t y = 0; y < 32; ++y)
    for (uint32_t x = 0; x < 32; ++x)
      for (uint32_t s = 0; s < 8; ++s) keys.insert(pixel_sample_stream(x, y, s));
  CHECK(keys.size() == 32u * 32u * 8u);
}
