#include "doctest.h"
#include "oracles.hpp"
#include "urbansynth/rng.hpp"
#include "urbansynth/sky.hpp"

using namespace urbansynth;

TEST_CASE("sun direction follows the azimuth/elevation convention") {
  SunSky sky;
  sky.sun_longitude_deg = 0;
  sky.sun_latitude_deg = 0;
  Vec3 d = sun_direction(sky);
  CHECK(d.x == doctest::Approx(1.0f));
  CHECK(length(d) == doctest::Approx(1.0f));

  sky.sun_latitude_deg = 90;
  d = sun_direction(sky);
  CHECK(d.z == doctest::Approx(1.0f));

  sky.sun_longitude_deg = 90;
  sky.sun_latitude_deg = 30;
  d = sun_direction(sky);
  CHECK(d.y == doctest::Approx(std::cos(radians(30.0f))));
  CHECK(d.z == doctest::Approx(0.5f));
}

TEST_CASE("sun disk returns sun radiance with clear sky") {
  SunSky sky;
  sky.cloud_cover = 0.0f;
  sky.sun_radiance = {1000, 900, 800};
  const Spectrum v = sky_radiance(sky, sun_direction(sky));
  CHECK(v.r == 1000.0f);
  CHECK(v.g == 900.0f);
  CHECK(v.b == 800.0f);
}

TEST_CASE("full cloud cover removes the sun disk entirely") {
  SunSky sky;
  sky.cloud_cover = 1.0f;
  sky.sun_radiance = {50000, 45000, 40000};
  const Spectrum disk = sky_radiance(sky, sun_direction(sky));
  const Spectrum base = sky_radiance_no_sun(sky, sun_direction(sky));
  CHECK(disk.r == doctest::Approx(base.r));
  CHECK(disk.g == doctest::Approx(base.g));
  // Within the cloud-layer bounds: nowhere near the sun radiance.
  CHECK(disk.r < 10.0f);
}

TEST_CASE("clear-sky gradient matches the documented formula") {
  SunSky sky;
  sky.cloud_cover = 0.0f;
  sky.sky_zenith_radiance = {0.2f, 0.3f, 0.6f};
  sky.sky_horizon_radiance = {0.6f, 0.65f, 0.75f};
  sky.sun_latitude_deg = 80;  // keep the disk away from the test directions

  RandomStream rng(5, 0);
  for (int i = 0; i < 200; ++i) {
    Vec3 d = normalize(Vec3{rng.next_in(-1, 1), rng.next_in(-1, 1), rng.next_in(-0.2f, 1.0f)});
    if (in_sun_cone(sky, d)) continue;
    const float t = std::fmax(d.z, 0.0f);
    // Independent evaluation of the documented interpolation.
    const Spectrum expected{0.6f + (0.2f - 0.6f) * t, 0.65f + (0.3f - 0.65f) * t,
                            0.75f + (0.6f - 0.75f) * t};
    const Spectrum got = sky_radiance(sky, d);
    CHECK(got.r == doctest::Approx(expected.r).epsilon(1e-5));
    CHECK(got.g == doctest::Approx(expected.g).epsilon(1e-5));
    CHECK(got.b == doctest::Approx(expected.b).epsilon(1e-5));
  }
}

TEST_CASE("sky radiance is a pure function") {
  SunSky sky;
  sky.cloud_cover = 0.55f;
  sky.cloud_noise_seed = 42;
  RandomStream rng(7, 1);
  for (int i = 0; i < 500; ++i) {
    const Vec3 d = normalize(Vec3{rng.next_in(-1, 1), rng.next_in(-1, 1), rng.next_in(-1, 1)});
    const Spectrum a = sky_radiance(sky, d);
    const Spectrum b = sky_radiance(sky, d);
    CHECK(a == b);
    CHECK(a.r >= 0.0f);
  }
}

TEST_CASE("uniform construction is uniform in every direction") {
  const SunSky sky = SunSky::uniform(Spectrum(1.0f));
  RandomStream rng(9, 2);
  for (int i = 0; i < 500; ++i) {
    const Vec3 d = normalize(Vec3{rng.next_in(-1, 1), rng.next_in(-1, 1), rng.next_in(-1, 1)});
    const Spectrum v = sky_radiance(sky, d);
    CHECK(v.r == doctest::Approx(1.0f).epsilon(1e-6));
    CHECK(v.g == doctest::Approx(1.0f).epsilon(1e-6));
  }
}

TEST_CASE("sun cone sampling: pdf is the inverse cone solid angle") {
  SunSky sky;
  sky.sun_angular_radius_deg = 0.265f;
  const float r = radians(0.265f);
  const float expected_pdf = 1.0f / (kTwoPi * (1.0f - std::cos(r)));
  const LightSample s = sample_sun(sky, {0.3f, 0.7f});
  CHECK(s.pdf == doctest::Approx(expected_pdf).epsilon(1e-4));
}

TEST_CASE("all sun samples lie within the cone") {
  SunSky sky;
  sky.sun_angular_radius_deg = 0.27f;
  const Vec3 sun = sun_direction(sky);
  const float cos_r = std::cos(radians(sky.sun_angular_radius_deg));
  RandomStream rng(11, 3);
  for (int i = 0; i < 100000; ++i) {
    const LightSample s = sample_sun(sky, rng.next_float2());
    CHECK(dot(s.direction, sun) >= cos_r - 1e-6f);
    CHECK(length(s.direction) == doctest::Approx(1.0f).epsilon(1e-5));
  }
}

TEST_CASE("sun irradiance estimator matches the analytic direct value") {
  SunSky sky;
  sky.cloud_cover = 0.0f;
  sky.sun_longitude_deg = 40;
  sky.sun_latitude_deg = 55;
  sky.sun_radiance = {30000, 28000, 25000};
  const Vec3 n = sun_direction(sky);  // plane facing the sun

  testing::RunningStat stat;
  RandomStream rng(13, 4);
  for (int i = 0; i < 100000; ++i) {
    const LightSample s = sample_sun(sky, rng.next_float2());
    stat.add(static_cast<double>(s.radiance.g) * dot(s.direction, n) / s.pdf);
  }
  const double analytic = static_cast<double>(sky.sun_radiance.g) * sun_solid_angle(sky);
  CHECK(stat.mean() == doctest::Approx(analytic).epsilon(0.01));
}

TEST_CASE("sample_sun radiance is consistent with sky_radiance") {
  SunSky sky;
  sky.cloud_cover = 0.35f;
  RandomStream rng(15, 5);
  for (int i = 0; i < 200; ++i) {
    const LightSample s = sample_sun(sky, rng.next_float2());
    const Spectrum direct = sky_radiance(sky, s.direction);
    CHECK(s.radiance == direct);
  }
}
