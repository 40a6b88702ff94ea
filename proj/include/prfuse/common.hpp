#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace prfuse {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using MatQx = Eigen::Matrix<double, 9, 3>;  // joint rates vs platform twist

inline constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a <= 0.0) a += 2.0 * kPi;
  return a - kPi;
}

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Unit vector at angle a.
inline Vec2 unit_vec(double a) { return Vec2(std::cos(a), std::sin(a)); }

/// Derivative of unit_vec w.r.t. its angle (a 90 deg rotation of it).
inline Vec2 unit_vec_perp(double a) { return Vec2(-std::sin(a), std::cos(a)); }

inline Mat2 rot2(double a) {
  Mat2 r;
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return r;
}

/// d/da rot2(a).
inline Mat2 rot2_deriv(double a) {
  Mat2 r;
  r << -std::sin(a), -std::cos(a), std::cos(a), -std::sin(a);
  return r;
}

inline Mat3 rot_x(double a) {
  Mat3 r;
  r << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
  return r;
}

inline Mat3 rot_y(double a) {
  Mat3 r;
  r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return r;
}

inline Mat3 rot_z(double a) {
  Mat3 r;
  r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return r;
}

/// Rotation matrix from intrinsic x-y'-z'' Euler angles.
inline Mat3 rot_euler_xyz(const Vec3& e) {
  return rot_x(e.x()) * rot_y(e.y()) * rot_z(e.z());
}

// ---------------------------------------------------------------------------
// Error types

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A leg cannot reach the requested pose (two-link triangle inequality).
struct Unreachable : Error {
  int leg;
  explicit Unreachable(int leg_)
      : Error("pose unreachable for leg " + std::to_string(leg_)), leg(leg_) {}
};

/// A kinematic projection matrix is singular below tolerance.
struct Singular : Error {
  explicit Singular(const std::string& what) : Error("singular: " + what) {}
};

/// Iterative solver failed to converge.
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what)
      : Error("no convergence: " + what) {}
};

/// Calibration data lacks the excitation needed to normalize the objective.
struct DegenerateExcitation : Error {
  explicit DegenerateExcitation(const std::string& what)
      : Error("degenerate excitation: " + what) {}
};

/// A metric normalizer (signal range) is zero or invalid.
struct DegenerateRange : Error {
  explicit DegenerateRange(const std::string& what)
      : Error("degenerate range: " + what) {}
};

struct EmptyLog : Error {
  explicit EmptyLog(const std::string& what) : Error("empty log: " + what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what)
      : Error("config: " + what) {}
};

}  // namespace prfuse
