#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace stationary {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Determinant (a, b, c) = <a, b x c>.
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.dot(b.cross(c));
}

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

}  // namespace stationary
