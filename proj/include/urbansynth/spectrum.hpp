#pragma once

#include <cmath>

namespace urbansynth {

// Linear scene-referred RGB. Radiance or reflectance depending on context;
// reflectance-typed values stay within [0, 1] per channel.
struct Spectrum {
  float r = 0.0f;
  float g = 0.0f;
  float b = 0.0f;

  Spectrum() = default;
  Spectrum(float r_, float g_, float b_) : r(r_), g(g_), b(b_) {}
  explicit Spectrum(float v) : r(v), g(v), b(v) {}

  Spectrum& operator+=(const Spectrum& o) {
    r += o.r;
    g += o.g;
    b += o.b;
    return *this;
  }
  Spectrum& operator*=(const Spectrum& o) {
    r *= o.r;
    g *= o.g;
    b *= o.b;
    return *this;
  }
  Spectrum& operator*=(float s) {
    r *= s;
    g *= s;
    b *= s;
    return *this;
  }

  bool is_black() const { return r == 0.0f && g == 0.0f && b == 0.0f; }
  bool is_finite() const { return std::isfinite(r) && std::isfinite(g) && std::isfinite(b); }
  float max_component() const { return std::fmax(r, std::fmax(g, b)); }
  // Rec.709 luminance weights.
  float luminance() const { return 0.2126f * r + 0.7152f * g + 0.0722f * b; }
};

inline Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
inline Spectrum operator-(const Spectrum& a, const Spectrum& b) {
  return {a.r - b.r, a.g - b.g, a.b - b.b};
}
inline Spectrum operator*(Spectrum a, const Spectrum& b) { return a *= b; }
inline Spectrum operator*(Spectrum a, float s) { return a *= s; }
inline Spectrum operator*(float s, Spectrum a) { return a *= s; }
inline Spectrum operator/(Spectrum a, float s) { return a *= (1.0f / s); }
inline bool operator==(const Spectrum& a, const Spectrum& b) {
  return a.r == b.r && a.g == b.g && a.b == b.b;
}

inline Spectrum lerp(const Spectrum& a, const Spectrum& b, float t) {
  return a + (b - a) * t;
}

}  // namespace urbansynth
