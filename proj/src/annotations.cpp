#include "urbansynth/annotations.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace urbansynth {

uint32_t InstanceMap::max_code() const {
  uint32_t m = 0;
  for (uint32_t c : codes) m = std::max(m, c);
  return m;
}

Annotations render_annotations(const RenderScene& scene, const Camera& camera) {
  const int width = camera.width;
  const int height = camera.height;

  Annotations out;
  out.label = {width, height, std::vector<uint8_t>(static_cast<size_t>(width) * height)};
  out.instance = {width, height, std::vector<uint32_t>(static_cast<size_t>(width) * height)};
  out.depth = {width, height, std::vector<float>(static_cast<size_t>(width) * height)};

  std::atomic<int> next_row{0};
  auto worker = [&]() {
    for (;;) {
      const int y = next_row.fetch_add(1, std::memory_order_relaxed);
      if (y >= height) return;
      for (int x = 0; x < width; ++x) {
        const Ray ray = camera.center_ray(x, y);
        const size_t i = static_cast<size_t>(y) * width + x;
        if (const auto hit = scene.intersect(ray)) {
          out.label.codes[i] = class_code(hit->class_id);
          out.instance.codes[i] = hit->instance_id;
          out.depth.meters[i] = hit->t;
        } else {
          out.label.codes[i] = class_code(ClassId::sky);
          out.instance.codes[i] = instance_code(ClassId::sky, 0);
          out.depth.meters[i] = 0.0f;
        }
      }
    }
  };

  unsigned n = std::thread::hardware_concurrency();
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < n; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return out;
}

}  // namespace urbansynth
