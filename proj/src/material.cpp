#include "urbansynth/material.hpp"

#include "urbansynth/noise.hpp"

namespace urbansynth {

namespace {

inline float ggx_alpha(const Material& mat) {
  const float a = mat.roughness * mat.roughness;
  return a < 1e-3f ? 1e-3f : a;
}

inline float ggx_d(float cos_h, float a2) {
  const float d = cos_h * cos_h * (a2 - 1.0f) + 1.0f;
  return a2 / (kPi * d * d);
}

inline float smith_g1(float cos_v, float a2) {
  return 2.0f * cos_v / (cos_v + std::sqrt(a2 + (1.0f - a2) * cos_v * cos_v));
}

inline Spectrum schlick_fresnel(const Spectrum& f0, float cos_d) {
  const float m = clampf(1.0f - cos_d, 0.0f, 1.0f);
  const float m2 = m * m;
  return f0 + (Spectrum(1.0f) - f0) * (m2 * m2 * m);
}

}  // namespace

Spectrum eval_brdf(const Material& mat, const Vec3& wi, const Vec3& wo, const Vec3& n) {
  const float cos_i = dot(wi, n);
  const float cos_o = dot(wo, n);
  if (cos_i <= 0.0f || cos_o <= 0.0f) return Spectrum(0.0f);

  switch (mat.kind) {
    case MaterialKind::lambertian:
      return mat.albedo * kInvPi;
    case MaterialKind::rough_specular: {
      const Vec3 h = normalize(wi + wo);
      const float cos_h = dot(h, n);
      if (cos_h <= 0.0f) return Spectrum(0.0f);
      const float a2 = ggx_alpha(mat) * ggx_alpha(mat);
      const float d = ggx_d(cos_h, a2);
      const float g = smith_g1(cos_i, a2) * smith_g1(cos_o, a2);
      const Spectrum f = schlick_fresnel(mat.albedo, dot(wo, h));
      return f * (d * g / (4.0f * cos_i * cos_o));
    }
    case MaterialKind::emissive:
      return Spectrum(0.0f);
  }
  return Spectrum(0.0f);
}

BrdfSample sample_brdf(const Material& mat, const Vec3& wo, const Vec3& n, const Vec2& u) {
  BrdfSample s;
  if (dot(wo, n) <= 0.0f || mat.kind == MaterialKind::emissive) return s;

  Vec3 t, b;
  orthonormal_basis(n, t, b);

  switch (mat.kind) {
    case MaterialKind::lambertian: {
      // Cosine-weighted hemisphere.
      const float r = std::sqrt(u.x);
      const float phi = kTwoPi * u.y;
      const float z = std::sqrt(std::fmax(0.0f, 1.0f - u.x));
      s.wi = normalize(t * (r * std::cos(phi)) + b * (r * std::sin(phi)) + n * z);
      s.pdf = std::fmax(dot(s.wi, n), 0.0f) * kInvPi;
      if (s.pdf <= 0.0f) return BrdfSample{};
      s.value = mat.albedo * kInvPi;
      return s;
    }
    case MaterialKind::rough_specular: {
      // Sample the half vector from the GGX distribution.
      const float a2 = ggx_alpha(mat) * ggx_alpha(mat);
      const float cos_h = std::sqrt(clampf((1.0f - u.x) / (u.x * (a2 - 1.0f) + 1.0f), 0.0f, 1.0f));
      const float sin_h = std::sqrt(std::fmax(0.0f, 1.0f - cos_h * cos_h));
      const float phi = kTwoPi * u.y;
      const Vec3 h =
          normalize(t * (sin_h * std::cos(phi)) + b * (sin_h * std::sin(phi)) + n * cos_h);
      const float wo_dot_h = dot(wo, h);
      if (wo_dot_h <= 0.0f) return BrdfSample{};
      s.wi = normalize(h * (2.0f * wo_dot_h) - wo);
      s.pdf = ggx_d(cos_h, a2) * cos_h / (4.0f * wo_dot_h);
      if (s.pdf <= 0.0f) return BrdfSample{};
      s.value = eval_brdf(mat, s.wi, wo, n);
      return s;
    }
    case MaterialKind::emissive:
      return s;
  }
  return s;
}

float brdf_pdf(const Material& mat, const Vec3& wi, const Vec3& wo, const Vec3& n) {
  const float cos_i = dot(wi, n);
  if (cos_i <= 0.0f || dot(wo, n) <= 0.0f) return 0.0f;
  switch (mat.kind) {
    case MaterialKind::lambertian:
      return cos_i * kInvPi;
    case MaterialKind::rough_specular: {
      const Vec3 h = normalize(wi + wo);
      const float cos_h = dot(h, n);
      const float wo_dot_h = dot(wo, h);
      if (cos_h <= 0.0f || wo_dot_h <= 0.0f) return 0.0f;
      const float a2 = ggx_alpha(mat) * ggx_alpha(mat);
      return ggx_d(cos_h, a2) * cos_h / (4.0f * wo_dot_h);
    }
    case MaterialKind::emissive:
      return 0.0f;
  }
  return 0.0f;
}

Spectrum textured_albedo(const Material& mat, const Vec2& uv) {
  const TextureParams& tex = mat.texture;
  if (tex.kind == TextureKind::none) return mat.albedo;

  const float x = uv.x * tex.scale;
  const float y = uv.y * tex.scale;
  float factor = 1.0f;

  if (tex.kind == TextureKind::asphalt) {
    // Cracks: thin ridges of high-frequency noise, gated by density.
    const float ridge = std::fabs(2.0f * fbm_2d(x * 4.0f, y * 4.0f, tex.seed, 3) - 1.0f);
    const float gate = value_noise_2d(x * 0.5f, y * 0.5f, tex.seed + 7u);
    if (gate < tex.crack_density && ridge < 0.06f) factor *= 0.45f;
    // Repair marks: coarse cells darkened as a block.
    const float cell = lattice_value(static_cast<int32_t>(std::floor(x * 0.25f)),
                                     static_cast<int32_t>(std::floor(y * 0.25f)), 3, tex.seed + 13u);
    if (cell < tex.repair_density) factor *= 0.78f;
    // Fine grain.
    factor *= 0.92f + 0.16f * value_noise_2d(x * 16.0f, y * 16.0f, tex.seed + 29u);
  } else if (tex.kind == TextureKind::pavement) {
    const float d = fbm_2d(x * 0.7f, y * 0.7f, tex.seed + 3u, 3);
    factor *= 1.0f - 0.5f * tex.dirt_amount * d;
    factor *= 0.94f + 0.12f * value_noise_2d(x * 12.0f, y * 12.0f, tex.seed + 31u);
  }

  Spectrum out = mat.albedo * factor;
  out.r = clampf(out.r, 0.0f, 1.0f);
  out.g = clampf(out.g, 0.0f, 1.0f);
  out.b = clampf(out.b, 0.0f, 1.0f);
  return out;
}

}  // namespace urbansynth
