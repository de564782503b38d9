#include "doctest.h"
#include "oracles.hpp"
#include "urbansynth/material.hpp"
#include "urbansynth/rng.hpp"

using namespace urbansynth;

namespace {

const Vec3 kUp{0, 0, 1};

Vec3 random_hemisphere_dir(RandomStream& rng) {
  // Uniform on the upper hemisphere.
  const float z = rng.next_float();
  const float phi = kTwoPi * rng.next_float();
  const float s = std::sqrt(std::fmax(0.0f, 1.0f - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

TEST_CASE("lambertian eval is albedo over pi inside the hemisphere") {
  const Material mat = Material::make_lambertian({0.5f, 0.5f, 0.5f});
  const Vec3 wi = normalize(Vec3{0.3f, 0.1f, 0.8f});
  const Vec3 wo = normalize(Vec3{-0.2f, 0.4f, 0.7f});
  const Spectrum f = eval_brdf(mat, wi, wo, kUp);
  CHECK(f.r == doctest::Approx(0.5f / kPi));
  CHECK(f.g == doctest::Approx(0.5f / kPi));
}

TEST_CASE("directions below the hemisphere evaluate to zero") {
  const Material mat = Material::make_lambertian({0.5f, 0.5f, 0.5f});
  const Vec3 wo = normalize(Vec3{0.1f, 0.0f, 0.9f});
  CHECK(eval_brdf(mat, {0, 0, -1}, wo, kUp).is_black());
  CHECK(eval_brdf(mat, wo, {0, 0, -1}, kUp).is_black());
  CHECK(brdf_pdf(mat, {0, 0, -1}, wo, kUp) == 0.0f);
}

TEST_CASE("reciprocity holds for both reflective models") {
  RandomStream rng(3, 0);
  const Material lam = Material::make_lambertian({0.6f, 0.3f, 0.2f});
  const Material ggx = Material::make_rough_specular({0.9f, 0.7f, 0.4f}, 0.3f);
  for (int i = 0; i < 500; ++i) {
    const Vec3 wi = random_hemisphere_dir(rng);
    const Vec3 wo = random_hemisphere_dir(rng);
    for (const Material& mat : {lam, ggx}) {
      const Spectrum a = eval_brdf(mat, wi, wo, kUp);
      const Spectrum b = eval_brdf(mat, wo, wi, kUp);
      CHECK(a.r == doctest::Approx(b.r).epsilon(1e-4));
      CHECK(a.g == doctest::Approx(b.g).epsilon(1e-4));
      CHECK(a.b == doctest::Approx(b.b).epsilon(1e-4));
    }
  }
}

TEST_CASE("energy conservation: hemispherical reflectance <= 1 per channel") {
  // 1e6-sample quadrature of eval * cos over the hemisphere, uniform pdf.
  RandomStream rng(7, 1);
  for (float roughness : {0.1f, 0.3f, 0.7f, 1.0f}) {
    const Material mat = Material::make_rough_specular({1.0f, 1.0f, 1.0f}, roughness);
    for (float wo_z : {0.9f, 0.5f, 0.15f}) {
      const Vec3 wo = normalize(Vec3{std::sqrt(1.0f - wo_z * wo_z), 0.0f, wo_z});
      testing::RunningStat stat;
      const int n = 1000000;
      for (int i = 0; i < n; ++i) {
        const Vec3 wi = random_hemisphere_dir(rng);
        const float cos_i = wi.z;
        // uniform hemisphere pdf = 1/(2 pi)
        stat.add(eval_brdf(mat, wi, wo, kUp).g * cos_i * kTwoPi);
      }
      CHECK(stat.mean() <= 1.0 + 3.0 * stat.std_error());
    }
  }
  // Lambertian closes the loop analytically.
  const Material lam = Material::make_lambertian({0.8f, 0.8f, 0.8f});
  testing::RunningStat stat;
  for (int i = 0; i < 200000; ++i) {
    const Vec3 wi = random_hemisphere_dir(rng);
    stat.add(eval_brdf(lam, wi, normalize(Vec3{0.2f, 0.1f, 0.9f}), kUp).g * wi.z * kTwoPi);
  }
  CHECK(stat.mean() == doctest::Approx(0.8).epsilon(0.02));
}

TEST_CASE("cosine sampling matches the analytic density (chi-squared, 64 bins)") {
  const Material mat = Material::make_lambertian({0.5f, 0.5f, 0.5f});
  const Vec3 wo = normalize(Vec3{0.1f, 0.2f, 0.9f});
  // Under the cosine density, cos^2(theta) and phi/2pi are independent
  // uniforms; an 8x8 grid over them has probability 1/64 per cell.
  constexpr int kGrid = 8;
  uint64_t bins[kGrid * kGrid] = {};
  const int n = 1000000;
  RandomStream rng(11, 2);
  for (int i = 0; i < n; ++i) {
    const BrdfSample s = sample_brdf(mat, wo, kUp, rng.next_float2());
    REQUIRE(s.pdf > 0.0f);
    const float cos2 = clampf(s.wi.z * s.wi.z, 0.0f, 0.999999f);
    float phi = std::atan2(s.wi.y, s.wi.x);
    if (phi < 0) phi += kTwoPi;
    const int bx = static_cast<int>(cos2 * kGrid);
    const int by = std::min(static_cast<int>(phi / kTwoPi * kGrid), kGrid - 1);
    bins[by * kGrid + bx]++;
  }
  const double expected = static_cast<double>(n) / (kGrid * kGrid);
  double chi2 = 0;
  for (uint64_t b : bins) {
    const double d = b - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < testing::kChi2Df63P999);
}

TEST_CASE("identical inputs give identical samples") {
  const Material mat = Material::make_lambertian({0.5f, 0.5f, 0.5f});
  const Vec3 wo = normalize(Vec3{0.3f, -0.2f, 0.8f});
  const BrdfSample a = sample_brdf(mat, wo, kUp, {0.5f, 0.5f});
  const BrdfSample b = sample_brdf(mat, wo, kUp, {0.5f, 0.5f});
  CHECK(a.wi == b.wi);
  CHECK(a.pdf == b.pdf);
}

TEST_CASE("sampling estimator recovers hemispherical reflectance") {
  RandomStream rng(13, 3);
  SUBCASE("lambertian: value*cos/pdf is exactly the albedo") {
    const Material mat = Material::make_lambertian({0.37f, 0.52f, 0.8f});
    const Vec3 wo = normalize(Vec3{0.4f, 0.1f, 0.9f});
    testing::RunningStat stat;
    for (int i = 0; i < 100000; ++i) {
      const BrdfSample s = sample_brdf(mat, wo, kUp, rng.next_float2());
      stat.add(s.value.r * dot(s.wi, kUp) / s.pdf);
    }
    CHECK(stat.mean() == doctest::Approx(0.37).epsilon(0.01));
    CHECK(stat.variance() < 1e-10);  // zero-variance estimator
  }
  SUBCASE("rough specular: sampled estimate matches independent quadrature") {
    const Material mat = Material::make_rough_specular({0.8f, 0.8f, 0.8f}, 0.4f);
    const Vec3 wo = normalize(Vec3{0.5f, 0.0f, 0.8f});
    testing::RunningStat sampled;
    for (int i = 0; i < 400000; ++i) {
      const BrdfSample s = sample_brdf(mat, wo, kUp, rng.next_float2());
      if (s.pdf <= 0.0f) {
        sampled.add(0.0);
        continue;
      }
      const float cos_i = dot(s.wi, kUp);
      sampled.add(cos_i > 0 ? s.value.g * cos_i / s.pdf : 0.0);
    }
    testing::RunningStat quadrature;
    for (int i = 0; i < 400000; ++i) {
      const Vec3 wi = random_hemisphere_dir(rng);
      quadrature.add(eval_brdf(mat, wi, wo, kUp).g * wi.z * kTwoPi);
    }
    const double combined =
        std::sqrt(sampled.std_error() * sampled.std_error() +
                  quadrature.std_error() * quadrature.std_error());
    CHECK(std::fabs(sampled.mean() - quadrature.mean()) < 3.0 * combined + 1e-4);
  }
}

TEST_CASE("sample_brdf pdf matches brdf_pdf for the generated direction") {
  RandomStream rng(17, 4);
  const Material ggx = Material::make_rough_specular({0.9f, 0.9f, 0.9f}, 0.25f);
  const Material lam = Material::make_lambertian({0.4f, 0.4f, 0.4f});
  for (int i = 0; i < 2000; ++i) {
    const Vec3 wo = random_hemisphere_dir(rng);
    for (const Material& mat : {ggx, lam}) {
      const BrdfSample s = sample_brdf(mat, wo, kUp, rng.next_float2());
      if (s.pdf <= 0.0f || dot(s.wi, kUp) <= 1e-3f) continue;
      // Near-grazing half vectors amplify float error in the huge-pdf
      // region; those samples carry negligible weight anyway.
      if (s.pdf > 1e4f) continue;
      CHECK(brdf_pdf(mat, s.wi, wo, kUp) == doctest::Approx(s.pdf).epsilon(1e-2));
    }
  }
}

TEST_CASE("textured albedo stays within reflectance bounds and is pure") {
  Material mat = Material::make_lambertian({0.2f, 0.2f, 0.2f});
  mat.texture = {TextureKind::asphalt, 0.8f, 0.5f, 0.0f, 1.0f, 99u};
  RandomStream rng(19, 5);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 uv{rng.next_in(-50, 50), rng.next_in(-50, 50)};
    const Spectrum a = textured_albedo(mat, uv);
    const Spectrum b = textured_albedo(mat, uv);
    CHECK(a == b);
    CHECK(a.r >= 0.0f);
    CHECK(a.r <= 1.0f);
  }
}
