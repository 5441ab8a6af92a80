#include "ambient/so3.hpp"

#include <cmath>
#include <stdexcept>

namespace ambient {

Eigen::Matrix3d hat3(const Eigen::Vector3d& x) {
  Eigen::Matrix3d m;
  m << 0.0, -x(2), x(1),
       x(2), 0.0, -x(0),
      -x(1), x(0), 0.0;
  return m;
}

Eigen::Vector3d vee3(const Eigen::Matrix3d& m, double tol) {
  if ((m + m.transpose()).norm() > tol) {
    throw std::invalid_argument("vee3: matrix is not skew-symmetric within tolerance");
  }
  return {m(2, 1), m(0, 2), m(1, 0)};
}

Eigen::Matrix3d exp_so3(const Eigen::Vector3d& omega) {
  const double theta = omega.norm();
  const Eigen::Matrix3d w = hat3(omega);
  double a, b;  // sin(t)/t and (1-cos(t))/t^2
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / (theta * theta);
  }
  return Eigen::Matrix3d::Identity() + a * w + b * (w * w);
}

}  // namespace ambient
