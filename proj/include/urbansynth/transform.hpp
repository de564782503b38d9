#pragma once

#include "urbansynth/vec.hpp"

namespace urbansynth {

// Row-major 3x3 rotation matrix.
struct Mat3 {
  float m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  static Mat3 identity() { return {}; }

  static Mat3 rotation_z(float angle_rad) {
    const float c = std::cos(angle_rad), s = std::sin(angle_rad);
    Mat3 r;
    r.m[0][0] = c;
    r.m[0][1] = -s;
    r.m[1][0] = s;
    r.m[1][1] = c;
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
};

struct Quat {
  float w = 1, x = 0, y = 0, z = 0;

  static Quat from_matrix(const Mat3& r);
  Mat3 to_matrix() const;
};

// Normalized linear interpolation between unit quaternions (shortest arc).
Quat nlerp(Quat a, const Quat& b, float t);

// Rigid body transform: p' = rotation * p + translation.
struct RigidTransform {
  Mat3 rotation;
  Vec3 translation;

  Vec3 apply_point(const Vec3& p) const { return rotation * p + translation; }
  Vec3 apply_vector(const Vec3& v) const { return rotation * v; }
  Vec3 apply_normal(const Vec3& n) const { return rotation * n; }  // rotations only, no scale

  static RigidTransform identity() { return {Mat3::identity(), {0, 0, 0}}; }
  static RigidTransform translate(const Vec3& t) { return {Mat3::identity(), t}; }
  static RigidTransform rotate_z(float angle_rad, const Vec3& t = {0, 0, 0}) {
    return {Mat3::rotation_z(angle_rad), t};
  }

  // Camera-style pose: basis columns are (right, up, back) in world space,
  // so the view direction is -column(2) and the matrix stays a proper
  // rotation.
  static RigidTransform look_at(const Vec3& eye, const Vec3& target, const Vec3& up_hint);
  Vec3 forward() const { return rotation.column(2) * -1.0f; }
};

// Translation lerped, rotation nlerped.
RigidTransform interpolate(const RigidTransform& a, const RigidTransform& b, float t);

}  // namespace urbansynth
