#include "urbansynth/camera.hpp"

namespace urbansynth {

Ray Camera::generate_ray(int px, int py, const Vec2& subpixel, float time_u) const {
  const float time = shutter_open + (shutter_close - shutter_open) * time_u;
  const RigidTransform xf = interpolate(pose, pose_at_shutter_end, time);

  const float tan_half = std::tan(0.5f * radians(vertical_fov_deg));
  const float aspect = static_cast<float>(width) / static_cast<float>(height);
  const float sx = ((px + subpixel.x) / width * 2.0f - 1.0f) * tan_half * aspect;
  const float sy = (1.0f - (py + subpixel.y) / height * 2.0f) * tan_half;

  const Vec3 dir_world =
      xf.rotation.column(0) * sx + xf.rotation.column(1) * sy + xf.forward();

  Ray ray;
  ray.origin = xf.translation;
  ray.direction = normalize(dir_world);
  ray.t_min = 1e-4f;
  ray.t_max = kRayInfinity;
  ray.time = time;
  return ray;
}

}  // namespace urbansynth
