#pragma once

#include <cstdint>

#include "urbansynth/film.hpp"
#include "urbansynth/rng.hpp"
#include "urbansynth/scene.hpp"

namespace urbansynth {

struct PathTracerConfig {
  int samples_per_pixel = 256;
  int max_depth = 6;
  int russian_roulette_start_depth = 4;
  float radiance_clamp = 0.0f;  // <= 0 disables clamping
  uint64_t seed = 0;
  // Diagnostic switch: with NEE off, the estimator converges to the same
  // mean through BRDF sampling alone.
  bool next_event_estimation = true;
};

// One unbiased radiance estimate along the ray, before any clamping. Depth
// counts ray segments: max_depth 1 returns only directly visible emission or
// sky radiance.
Spectrum trace_path(const RenderScene& scene, const Ray& ray, RandomStream& rng,
                    const PathTracerConfig& cfg);

// Renders camera.resolution at cfg.samples_per_pixel with stratified
// sub-pixel positions and per-sample shutter times. Deterministic in
// (scene, camera, cfg.seed) and independent of worker count: every sample's
// RNG stream is keyed by (seed, pixel, sample index) alone.
// worker_count 0 picks the hardware concurrency.
HdrFilm render(const RenderScene& scene, const Camera& camera, const PathTracerConfig& cfg,
               int worker_count = 0);

}  // namespace urbansynth
