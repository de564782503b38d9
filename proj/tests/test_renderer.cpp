#include "doctest.h"
#include "oracles.hpp"
#include "urbansynth/assets.hpp"
#include "urbansynth/pathtracer.hpp"

using namespace urbansynth;

namespace {

TriangleMesh wall_quad(float x, float y0, float y1, float z0, float z1) {
  // Plane x = const facing -x.
  TriangleMesh mesh;
  append_quad(mesh, {x, y1, z0}, {x, y0, z0}, {x, y0, z1}, {x, y1, z1});
  return mesh;
}

TriangleMesh ground_quad(float extent) {
  TriangleMesh mesh;
  append_quad(mesh, {-extent, -extent, 0}, {extent, -extent, 0}, {extent, extent, 0},
              {-extent, extent, 0});
  return mesh;
}

Camera basic_camera(int width, int height, const Vec3& eye, const Vec3& target, float fov = 45) {
  Camera cam;
  cam.pose = RigidTransform::look_at(eye, target, {0, 0, 1});
  cam.pose_at_shutter_end = cam.pose;
  cam.vertical_fov_deg = fov;
  cam.width = width;
  cam.height = height;
  return cam;
}

RenderScene emissive_wall_scene(const Spectrum& emission) {
  SceneGraph g;
  g.sky = SunSky::uniform(Spectrum(0.0f));
  const int mat = g.add_material(Material::make_emissive(emission));
  TriangleMesh wall = wall_quad(5.0f, -100, 100, -100, 100);
  wall.material_id = mat;
  wall.class_id = ClassId::building;
  g.meshes.push_back(std::move(wall));
  g.camera = basic_camera(8, 8, {0, 0, 0}, {1, 0, 0});
  return RenderScene::build(std::move(g));
}

}  // namespace

TEST_CASE("camera ray into an emissive quad returns the emission exactly at depth 1") {
  const RenderScene scene = emissive_wall_scene({3, 3, 3});
  PathTracerConfig cfg;
  cfg.max_depth = 1;
  cfg.samples_per_pixel = 1;
  RandomStream rng(0, 0);
  Ray ray{{0, 0, 0}, {1, 0, 0}, 1e-4f, kRayInfinity, 0.0f};
  const Spectrum L = trace_path(scene, ray, rng, cfg);
  CHECK(L.r == 3.0f);
  CHECK(L.g == 3.0f);
  CHECK(L.b == 3.0f);
}

TEST_CASE("lambertian plane under a uniform unit sky converges to albedo * L") {
  SceneGraph g;
  g.sky = SunSky::uniform(Spectrum(1.0f));
  const int mat = g.add_material(Material::make_lambertian({0.5f, 0.5f, 0.5f}));
  TriangleMesh plane = ground_quad(2000.0f);
  plane.material_id = mat;
  g.meshes.push_back(std::move(plane));
  g.camera = basic_camera(4, 4, {0, 0, 2}, {5, 0, 0.5f});
  const RenderScene scene = RenderScene::build(std::move(g));

  PathTracerConfig cfg;
  cfg.max_depth = 4;
  const Ray ray{{0, 0, 2}, normalize(Vec3{1, 0, -0.4f}), 1e-4f, kRayInfinity, 0.0f};
  testing::RunningStat stat;
  for (int s = 0; s < 4096; ++s) {
    RandomStream rng(99, pixel_sample_stream(1, 1, s));
    stat.add(trace_path(scene, ray, rng, cfg).g);
  }
  const double tolerance = 3.0 * std::max(stat.std_error(), 1e-4);
  CHECK(std::fabs(stat.mean() - 0.5) < tolerance);
}

TEST_CASE("white furnace: albedo-1 sphere disappears into a uniform environment") {
  SceneGraph g;
  g.sky = SunSky::uniform(Spectrum(1.0f));
  const int mat = g.add_material(Material::make_lambertian({1.0f, 1.0f, 1.0f}));
  TriangleMesh sphere = make_icosphere({4, 0, 0}, 1.0f, 3);
  sphere.material_id = mat;
  g.meshes.push_back(std::move(sphere));
  const Camera cam = basic_camera(24, 24, {0, 0, 0}, {1, 0, 0}, 32.0f);
  g.camera = cam;
  const RenderScene scene = RenderScene::build(std::move(g));

  PathTracerConfig cfg;
  cfg.samples_per_pixel = 256;
  cfg.max_depth = 8;
  cfg.seed = 5;
  const HdrFilm film = render(scene, cam, cfg);
  double err = 0;
  for (int y = 0; y < film.height(); ++y)
    for (int x = 0; x < film.width(); ++x) err += std::fabs(film.pixel(x, y).g - 1.0);
  err /= film.width() * film.height();
  CHECK(err < 0.02);
}

TEST_CASE("film rejects non-finite samples and counts them") {
  HdrFilm film(2, 2);
  film.add_sample(0, 0, Spectrum(1.0f));
  film.add_sample(0, 0, {std::numeric_limits<float>::quiet_NaN(), 0, 0});
  film.add_sample(1, 0, {std::numeric_limits<float>::infinity(), 0, 0});
  film.add_sample(1, 1, {-1.0f, 0, 0});
  CHECK(film.rejected_count() == 3);
  CHECK(film.sample_count(0, 0) == 1);
  CHECK(film.pixel(0, 0).r == 1.0f);
}

TEST_CASE("render is deterministic across runs and worker counts") {
  const RenderScene scene = emissive_wall_scene({0.8f, 0.5f, 0.2f});
  Camera cam = basic_camera(32, 24, {0, 0, 0}, {1, 0, 0});
  PathTracerConfig cfg;
  cfg.samples_per_pixel = 16;
  cfg.max_depth = 3;
  cfg.seed = 77;

  const HdrFilm a = render(scene, cam, cfg, 1);
  const HdrFilm b = render(scene, cam, cfg, 1);
  const HdrFilm c = render(scene, cam, cfg, 4);
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      CHECK(a.pixel(x, y) == b.pixel(x, y));
      CHECK(a.pixel(x, y) == c.pixel(x, y));
    }
  }
}

TEST_CASE("pixel straddling a radiance boundary averages the two sides") {
  // Emissive half-plane covering y < 0 seen from the origin: the image
  // column through the boundary must average to one half.
  SceneGraph g;
  g.sky = SunSky::uniform(Spectrum(0.0f));
  const int mat = g.add_material(Material::make_emissive({1, 1, 1}));
  TriangleMesh wall = wall_quad(10.0f, -200, 0, -200, 200);
  wall.material_id = mat;
  g.meshes.push_back(std::move(wall));
  Camera cam = basic_camera(33, 5, {0, 0, 0}, {1, 0, 0});
  g.camera = cam;
  const RenderScene scene = RenderScene::build(std::move(g));

  PathTracerConfig cfg;
  cfg.samples_per_pixel = 4096;
  cfg.max_depth = 1;
  cfg.seed = 3;
  const HdrFilm film = render(scene, cam, cfg);

  // Camera right is -y, so the emissive half-plane (y < 0) fills the right
  // half of the image.
  const float boundary = film.pixel(16, 2).g;   // straddles the edge
  const float bright = film.pixel(28, 2).g;     // fully on the emissive side
  const float dark = film.pixel(4, 2).g;        // fully off
  CHECK(boundary == doctest::Approx(0.5f).epsilon(0.05));
  CHECK(bright == doctest::Approx(1.0f).epsilon(1e-3));
  CHECK(dark == doctest::Approx(0.0f).epsilon(1e-3));
}

TEST_CASE("motion blur smears an object across the predicted pixel span") {
  SceneGraph g;
  g.sky = SunSky::uniform(Spectrum(0.0f));
  const int mat = g.add_material(Material::make_emissive({5, 5, 5}));
  TriangleMesh quad = wall_quad(10.0f, -0.25f, 0.25f, -2, 2);
  quad.material_id = mat;
  g.meshes.push_back(std::move(quad));

  Camera cam = basic_camera(64, 9, {0, 0, 0}, {1, 0, 0});
  cam.shutter_open = 0.0f;
  cam.shutter_close = 1.0f;
  cam.pose_at_shutter_end = cam.pose;
  cam.pose_at_shutter_end.translation = {0, 1.0f, 0};  // one meter sideways
  g.camera = cam;
  const RenderScene scene = RenderScene::build(std::move(g));

  PathTracerConfig cfg;
  cfg.samples_per_pixel = 512;
  cfg.max_depth = 1;
  cfg.seed = 9;
  const HdrFilm film = render(scene, cam, cfg);

  // Project the apparent y-range [-1.25, 0.25] at depth 10 through the
  // camera: pixel = (0.5 - y / (2 * 10 * tan * aspect)) * width.
  const float tan_half = std::tan(0.5f * radians(cam.vertical_fov_deg));
  const float aspect = static_cast<float>(cam.width) / cam.height;
  auto pixel_of = [&](float y) {
    const float sx = -y / 10.0f / (tan_half * aspect);  // camera right = -y
    return (sx + 1.0f) * 0.5f * cam.width;
  };
  const float px_lo = pixel_of(0.25f);   // left edge of the smear
  const float px_hi = pixel_of(-1.25f);  // right edge

  for (int x = 0; x < cam.width; ++x) {
    const float v = film.pixel(x, 4).g;
    if (x + 1 < px_lo - 1 || x > px_hi + 1) {
      CHECK(v == doctest::Approx(0.0f).epsilon(1e-3));
    }
  }
  // Energy present through the whole smeared span.
  int lit = 0;
  for (int x = static_cast<int>(px_lo) + 1; x < static_cast<int>(px_hi) - 1; ++x)
    if (film.pixel(x, 4).g > 0.01f) lit++;
  CHECK(lit >= static_cast<int>(px_hi - px_lo) - 3);
}

TEST_CASE("next-event estimation changes variance, not the converged mean") {
  // Ground plane lit by a small emissive panel and the sun.
  SceneGraph g;
  g.sky.sun_longitude_deg = 30;
  g.sky.sun_latitude_deg = 50;
  g.sky.sun_radiance = {8000, 8000, 8000};
  g.sky.cloud_cover = 0.0f;
  const int ground_mat = g.add_material(Material::make_lambertian({0.4f, 0.4f, 0.4f}));
  const int panel_mat = g.add_material(Material::make_emissive({40, 40, 40}));
  TriangleMesh ground = ground_quad(50.0f);
  ground.material_id = ground_mat;
  g.meshes.push_back(std::move(ground));
  TriangleMesh panel;
  append_quad(panel, {2, -1, 3}, {4, -1, 3}, {4, 1, 3}, {2, 1, 3});  // facing down
  panel.material_id = panel_mat;
  g.meshes.push_back(std::move(panel));
  g.camera = basic_camera(4, 4, {0, 0, 1.5f}, {4, 0, 0});
  const RenderScene scene = RenderScene::build(std::move(g));

  const Ray ray{{0, 0, 1.5f}, normalize(Vec3{1, 0, -0.35f}), 1e-4f, kRayInfinity, 0.0f};
  PathTracerConfig cfg;
  cfg.max_depth = 4;

  testing::RunningStat with_nee, without_nee;
  for (int s = 0; s < 16384; ++s) {
    RandomStream rng_a(1234, pixel_sample_stream(0, 0, s));
    cfg.next_event_estimation = true;
    with_nee.add(trace_path(scene, ray, rng_a, cfg).g);
    RandomStream rng_b(987654, pixel_sample_stream(0, 0, s));
    cfg.next_event_estimation = false;
    without_nee.add(trace_path(scene, ray, rng_b, cfg).g);
  }
  const double combined = std::sqrt(with_nee.std_error() * with_nee.std_error() +
                                    without_nee.std_error() * without_nee.std_error());
  CHECK(std::fabs(with_nee.mean() - without_nee.mean()) < 3.0 * combined);
  // NEE must actually reduce variance on this scene.
  CHECK(with_nee.variance() < without_nee.variance());
}

TEST_CASE("energy sanity: no pixel exceeds the uniform environment bound") {
  SceneGraph g;
  g.sky = SunSky::uniform(Spectrum(2.0f));
  const int mat = g.add_material(Material::make_lambertian({0.85f, 0.85f, 0.85f}));
  TriangleMesh box;
  append_box(box, {5, 0, 1}, {1, 1, 1});
  box.material_id = mat;
  g.meshes.push_back(std::move(box));
  TriangleMesh ground = ground_quad(30.0f);
  ground.material_id = mat;
  g.meshes.push_back(std::move(ground));
  Camera cam = basic_camera(16, 16, {0, 0, 1.5f}, {5, 0, 1});
  g.camera = cam;
  const RenderScene scene = RenderScene::build(std::move(g));

  PathTracerConfig cfg;
  cfg.samples_per_pixel = 256;
  cfg.max_depth = 6;
  cfg.seed = 21;
  const HdrFilm film = render(scene, cam, cfg);
  for (int y = 0; y < film.height(); ++y)
    for (int x = 0; x < film.width(); ++x) CHECK(film.pixel(x, y).max_component() <= 2.0f * 1.02f);
}
