#include "urbansynth/transform.hpp"

namespace urbansynth {

Quat Quat::from_matrix(const Mat3& r) {
  Quat q;
  const float trace = r.m[0][0] + r.m[1][1] + r.m[2][2];
  if (trace > 0.0f) {
    float s = std::sqrt(trace + 1.0f);
    q.w = 0.5f * s;
    s = 0.5f / s;
    q.x = (r.m[2][1] - r.m[1][2]) * s;
    q.y = (r.m[0][2] - r.m[2][0]) * s;
    q.z = (r.m[1][0] - r.m[0][1]) * s;
  } else {
    int i = 0;
    if (r.m[1][1] > r.m[0][0]) i = 1;
    if (r.m[2][2] > r.m[i][i]) i = 2;
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    float s = std::sqrt(r.m[i][i] - r.m[j][j] - r.m[k][k] + 1.0f);
    float qv[3];
    qv[i] = 0.5f * s;
    s = 0.5f / s;
    q.w = (r.m[k][j] - r.m[j][k]) * s;
    qv[j] = (r.m[j][i] + r.m[i][j]) * s;
    qv[k] = (r.m[k][i] + r.m[i][k]) * s;
    q.x = qv[0];
    q.y = qv[1];
    q.z = qv[2];
  }
  return q;
}

Mat3 Quat::to_matrix() const {
  Mat3 r;
  const float xx = x * x, yy = y * y, zz = z * z;
  const float xy = x * y, xz = x * z, yz = y * z;
  const float wx = w * x, wy = w * y, wz = w * z;
  r.m[0][0] = 1 - 2 * (yy + zz);
  r.m[0][1] = 2 * (xy - wz);
  r.m[0][2] = 2 * (xz + wy);
  r.m[1][0] = 2 * (xy + wz);
  r.m[1][1] = 1 - 2 * (xx + zz);
  r.m[1][2] = 2 * (yz - wx);
  r.m[2][0] = 2 * (xz - wy);
  r.m[2][1] = 2 * (yz + wx);
  r.m[2][2] = 1 - 2 * (xx + yy);
  return r;
}

Quat nlerp(Quat a, const Quat& b, float t) {
  float d = a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
  if (d < 0.0f) {
    a.w = -a.w;
    a.x = -a.x;
    a.y = -a.y;
    a.z = -a.z;
  }
  Quat q{a.w + (b.w - a.w) * t, a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t,
         a.z + (b.z - a.z) * t};
  const float inv = 1.0f / std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  q.w *= inv;
  q.x *= inv;
  q.y *= inv;
  q.z *= inv;
  return q;
}

RigidTransform RigidTransform::look_at(const Vec3& eye, const Vec3& target, const Vec3& up_hint) {
  const Vec3 forward = normalize(target - eye);
  const Vec3 right = normalize(cross(forward, up_hint));
  const Vec3 up = cross(right, forward);
  // Columns (right, up, back): a proper rotation (determinant +1), which the
  // quaternion interpolation requires. The view direction is -column(2).
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    r.m[i][0] = right[i];
    r.m[i][1] = up[i];
    r.m[i][2] = -forward[i];
  }
  return {r, eye};
}

RigidTransform interpolate(const RigidTransform& a, const RigidTransform& b, float t) {
  if (t <= 0.0f) return a;
  if (t >= 1.0f) return b;
  const Quat qa = Quat::from_matrix(a.rotation);
  const Quat qb = Quat::from_matrix(b.rotation);
  return {nlerp(qa, qb, t).to_matrix(), lerp(a.translation, b.translation, t)};
}

}  // namespace urbansynth
