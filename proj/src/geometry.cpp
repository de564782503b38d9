#include "urbansynth/geometry.hpp"

namespace urbansynth {

std::optional<TriangleHit> intersect_triangle(const Ray& ray, const Vec3& v0, const Vec3& v1,
                                              const Vec3& v2) {
  // Pick the dominant ray axis and permute it to z, keeping winding.
  const Vec3 d = ray.direction;
  const float ax = std::fabs(d.x), ay = std::fabs(d.y), az = std::fabs(d.z);
  int kz = 0;
  if (ay > ax && ay >= az)
    kz = 1;
  else if (az > ax && az > ay)
    kz = 2;
  int kx = kz + 1 == 3 ? 0 : kz + 1;
  int ky = kx + 1 == 3 ? 0 : kx + 1;
  if (d[kz] < 0.0f) std::swap(kx, ky);

  const float sz = 1.0f / d[kz];
  const float sx = d[kx] * sz;
  const float sy = d[ky] * sz;

  const Vec3 a = v0 - ray.origin;
  const Vec3 b = v1 - ray.origin;
  const Vec3 c = v2 - ray.origin;

  const float axs = a[kx] - sx * a[kz];
  const float ays = a[ky] - sy * a[kz];
  const float bxs = b[kx] - sx * b[kz];
  const float bys = b[ky] - sy * b[kz];
  const float cxs = c[kx] - sx * c[kz];
  const float cys = c[ky] - sy * c[kz];

  float u = cxs * bys - cys * bxs;
  float v = axs * cys - ays * cxs;
  float w = bxs * ays - bys * axs;

  // Double-precision fallback for edges, required for watertightness.
  if (u == 0.0f || v == 0.0f || w == 0.0f) {
    u = static_cast<float>(static_cast<double>(cxs) * bys - static_cast<double>(cys) * bxs);
    v = static_cast<float>(static_cast<double>(axs) * cys - static_cast<double>(ays) * cxs);
    w = static_cast<float>(static_cast<double>(bxs) * ays - static_cast<double>(bys) * axs);
  }

  if ((u < 0.0f || v < 0.0f || w < 0.0f) && (u > 0.0f || v > 0.0f || w > 0.0f)) return std::nullopt;

  const float det = u + v + w;
  if (det == 0.0f) return std::nullopt;  // parallel or degenerate

  const float azs = sz * a[kz];
  const float bzs = sz * b[kz];
  const float czs = sz * c[kz];
  const float t_scaled = u * azs + v * bzs + w * czs;

  const float inv_det = 1.0f / det;
  const float t = t_scaled * inv_det;
  if (!(t >= ray.t_min && t <= ray.t_max)) return std::nullopt;

  return TriangleHit{t, u * inv_det, v * inv_det, w * inv_det};
}

}  // namespace urbansynth
