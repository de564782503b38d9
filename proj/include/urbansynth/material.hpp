#pragma once

#include <cstdint>

#include "urbansynth/rng.hpp"
#include "urbansynth/spectrum.hpp"
#include "urbansynth/vec.hpp"

namespace urbansynth {

enum class MaterialKind : uint8_t { lambertian, rough_specular, emissive };

// Procedural albedo modulation evaluated at shading time from the hit uv.
// Densities are in [0, 1]; appearance is documented but not calibrated.
enum class TextureKind : uint8_t { none, asphalt, pavement };

struct TextureParams {
  TextureKind kind = TextureKind::none;
  float crack_density = 0.0f;   // asphalt: dark crack lines
  float repair_density = 0.0f;  // asphalt: darker patched rectangles
  float dirt_amount = 0.0f;     // pavement: low-frequency darkening
  float scale = 1.0f;           // uv tiles per meter
  uint32_t seed = 0;
};

struct Material {
  MaterialKind kind = MaterialKind::lambertian;
  Spectrum albedo;              // reflectance, <= 1 per channel
  float roughness = 0.5f;       // rough_specular only, in (0, 1]
  Spectrum emission;            // radiance, emissive only
  TextureParams texture;

  static Material make_lambertian(const Spectrum& albedo) {
    Material m;
    m.kind = MaterialKind::lambertian;
    m.albedo = albedo;
    return m;
  }
  static Material make_rough_specular(const Spectrum& albedo, float roughness) {
    Material m;
    m.kind = MaterialKind::rough_specular;
    m.albedo = albedo;
    m.roughness = roughness;
    return m;
  }
  static Material make_emissive(const Spectrum& emission) {
    Material m;
    m.kind = MaterialKind::emissive;
    m.emission = emission;
    return m;
  }
};

struct BrdfSample {
  Vec3 wi;         // unit, sampled incident direction
  float pdf = 0;   // solid-angle density of the sampling scheme
  Spectrum value;  // eval_brdf(mat, wi, wo, n)
};

// BRDF value for incident wi and outgoing wo around shading normal n.
// Zero when either direction is below the hemisphere. Reciprocal in (wi, wo).
Spectrum eval_brdf(const Material& mat, const Vec3& wi, const Vec3& wo, const Vec3& n);

// Importance-samples wi for the given wo. Lambertian uses cosine-weighted
// hemisphere sampling; rough_specular samples the GGX normal distribution.
BrdfSample sample_brdf(const Material& mat, const Vec3& wo, const Vec3& n, const Vec2& u);

// Density of sample_brdf for the pair (wo -> wi). Used for MIS weights.
float brdf_pdf(const Material& mat, const Vec3& wi, const Vec3& wo, const Vec3& n);

// Albedo with the procedural texture applied at surface point uv.
Spectrum textured_albedo(const Material& mat, const Vec2& uv);

}  // namespace urbansynth
