#include "urbansynth/pathtracer.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace urbansynth {

namespace {

inline float balance_weight(float pdf_this, float pdf_other) {
  return pdf_this / (pdf_this + pdf_other);
}

inline Vec3 offset_origin(const SurfaceInteraction& si, const Vec3& dir) {
  const float side = dot(dir, si.geometric_normal) >= 0.0f ? 1.0f : -1.0f;
  return si.point + si.geometric_normal * (side * kShadowEpsilon);
}

}  // namespace

Spectrum trace_path(const RenderScene& scene, const Ray& input_ray, RandomStream& rng,
                    const PathTracerConfig& cfg) {
  Spectrum radiance(0.0f);
  Spectrum beta(1.0f);
  Ray ray = input_ray;
  float prev_brdf_pdf = 0.0f;
  const SunSky& sky = scene.sky();
  const float sun_pdf = 1.0f / sun_solid_angle(sky);

  for (int depth = 1; depth <= cfg.max_depth; ++depth) {
    const auto hit = scene.intersect(ray);

    if (!hit) {
      // The sun cone is also covered by NEE from the previous vertex, so the
      // sky seen through it is MIS-weighted against the cone density.
      float w = 1.0f;
      if (cfg.next_event_estimation && depth > 1 && in_sun_cone(sky, ray.direction)) {
        w = balance_weight(prev_brdf_pdf, sun_pdf);
      }
      radiance += beta * sky_radiance(sky, ray.direction) * w;
      break;
    }

    const Material& raw_mat = scene.material(hit->material_id);
    if (raw_mat.kind == MaterialKind::emissive) {
      float w = 1.0f;
      if (cfg.next_event_estimation && depth > 1 && scene.has_emitters()) {
        const float cos_l = -dot(hit->geometric_normal, ray.direction);  // normal faces the ray
        const float pdf_light = hit->t * hit->t / (std::fmax(cos_l, 1e-6f) * scene.emitter_area());
        w = balance_weight(prev_brdf_pdf, pdf_light);
      }
      radiance += beta * raw_mat.emission * w;
      break;
    }

    if (depth == cfg.max_depth) break;

    const Material mat = scene.shading_material(*hit);
    const Vec3 wo = -ray.direction;
    const Vec3 ns = hit->shading_normal;

    if (cfg.next_event_estimation) {
      // Sun.
      const LightSample ls = sample_sun(sky, rng.next_float2());
      const float cos_i = dot(ls.direction, ns);
      if (ls.pdf > 0.0f && cos_i > 0.0f && dot(ls.direction, hit->geometric_normal) > 0.0f &&
          !ls.radiance.is_black()) {
        const Spectrum f = eval_brdf(mat, ls.direction, wo, ns);
        if (!f.is_black()) {
          Ray shadow{offset_origin(*hit, ls.direction), ls.direction, 0.0f, kRayInfinity,
                     ray.time};
          if (!scene.occluded(shadow)) {
            const float w = balance_weight(ls.pdf, brdf_pdf(mat, ls.direction, wo, ns));
            radiance += beta * f * ls.radiance * (cos_i / ls.pdf * w);
          }
        }
      }
      // Area emitters.
      if (scene.has_emitters()) {
        const float u_pick = rng.next_float();
        const EmitterSample es = scene.sample_emitter(u_pick, rng.next_float2());
        Vec3 to_light = es.point - hit->point;
        const float dist2 = length_squared(to_light);
        if (dist2 > 1e-8f) {
          const float dist = std::sqrt(dist2);
          const Vec3 wl = to_light / dist;
          const float cos_s = dot(wl, ns);
          const float cos_l = std::fabs(dot(es.normal, wl));  // two-sided emitters
          if (cos_s > 0.0f && cos_l > 1e-6f && dot(wl, hit->geometric_normal) > 0.0f) {
            const float pdf_light = dist2 / (cos_l * scene.emitter_area());
            const Spectrum f = eval_brdf(mat, wl, wo, ns);
            if (!f.is_black() && pdf_light > 0.0f) {
              Ray shadow{offset_origin(*hit, wl), wl, 0.0f, dist * (1.0f - 1e-3f), ray.time};
              if (!scene.occluded(shadow)) {
                const float w = balance_weight(pdf_light, brdf_pdf(mat, wl, wo, ns));
                radiance += beta * f * es.emission * (cos_s / pdf_light * w);
              }
            }
          }
        }
      }
    }

    // BRDF-sampled continuation.
    const BrdfSample bs = sample_brdf(mat, wo, ns, rng.next_float2());
    if (bs.pdf <= 0.0f || bs.value.is_black()) break;
    if (dot(bs.wi, hit->geometric_normal) <= 0.0f) break;
    beta *= bs.value * (dot(bs.wi, ns) / bs.pdf);
    prev_brdf_pdf = bs.pdf;
    ray = Ray{offset_origin(*hit, bs.wi), bs.wi, 0.0f, kRayInfinity, ray.time};

    if (depth >= cfg.russian_roulette_start_depth) {
      const float q = clampf(beta.luminance(), 0.05f, 0.95f);
      if (rng.next_float() >= q) break;
      beta *= 1.0f / q;
    }
  }
  return radiance;
}

HdrFilm render(const RenderScene& scene, const Camera& camera, const PathTracerConfig& cfg,
               int worker_count) {
  const int width = camera.width;
  const int height = camera.height;
  HdrFilm film(width, height);

  const int spp = cfg.samples_per_pixel;
  const int strata = static_cast<int>(std::lround(std::sqrt(static_cast<double>(spp))));
  const bool stratified = strata * strata == spp;
  const float inv_spp = 1.0f / static_cast<float>(spp);

  constexpr int kTile = 32;
  const int tiles_x = (width + kTile - 1) / kTile;
  const int tiles_y = (height + kTile - 1) / kTile;
  const int tile_count = tiles_x * tiles_y;
  std::atomic<int> next_tile{0};

  auto worker = [&]() {
    for (;;) {
      const int tile = next_tile.fetch_add(1, std::memory_order_relaxed);
      if (tile >= tile_count) return;
      const int x0 = (tile % tiles_x) * kTile;
      const int y0 = (tile / tiles_x) * kTile;
      const int x1 = std::min(x0 + kTile, width);
      const int y1 = std::min(y0 + kTile, height);
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          for (int s = 0; s < spp; ++s) {
            RandomStream rng(cfg.seed, pixel_sample_stream(x, y, s));
            Vec2 sub = rng.next_float2();
            if (stratified) {
              sub.x = (s % strata + sub.x) / strata;
              sub.y = (s / strata + sub.y) / strata;
            }
            const float time_u = (s + rng.next_float()) * inv_spp;
            const Ray ray = camera.generate_ray(x, y, sub, time_u);
            Spectrum L = trace_path(scene, ray, rng, cfg);
            if (cfg.radiance_clamp > 0.0f) {
              L.r = std::fmin(L.r, cfg.radiance_clamp);
              L.g = std::fmin(L.g, cfg.radiance_clamp);
              L.b = std::fmin(L.b, cfg.radiance_clamp);
            }
            film.add_sample(x, y, L);
          }
        }
      }
    }
  };

  int n = worker_count > 0 ? worker_count : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (int i = 0; i < n; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return film;
}

}  // namespace urbansynth
