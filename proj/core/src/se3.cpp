#include "ambient/se3.hpp"

#include <cmath>
#include <stdexcept>

#include "ambient/so3.hpp"

namespace ambient {

Eigen::Matrix4d hat_se3(const Eigen::Vector3d& omega, const Eigen::Vector3d& v) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.topLeftCorner<3, 3>() = hat3(omega);
  m.topRightCorner<3, 1>() = v;
  return m;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> vee_se3(const Eigen::Matrix4d& m, double tol) {
  const Eigen::Matrix3d r = m.topLeftCorner<3, 3>();
  if ((r + r.transpose()).norm() > tol || m.bottomRows<1>().norm() > tol) {
    throw std::invalid_argument("vee_se3: matrix is not in the algebra within tolerance");
  }
  return {Eigen::Vector3d(m(2, 1), m(0, 2), m(1, 0)), m.topRightCorner<3, 1>()};
}

Eigen::Matrix4d exp_se3(const Eigen::Vector3d& omega, const Eigen::Vector3d& v) {
  const double theta = omega.norm();
  const Eigen::Matrix3d w = hat3(omega);
  double b, c;  // (1-cos(t))/t^2 and (t-sin(t))/t^3
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    c = 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
  } else {
    b = (1.0 - std::cos(theta)) / (theta * theta);
    c = (theta - std::sin(theta)) / (theta * theta * theta);
  }
  const Eigen::Matrix3d jl = Eigen::Matrix3d::Identity() + b * w + c * (w * w);
  Eigen::Matrix4d x = Eigen::Matrix4d::Identity();
  x.topLeftCorner<3, 3>() = exp_so3(omega);
  x.topRightCorner<3, 1>() = jl * v;
  return x;
}

Eigen::Matrix4d proj_se3_closed_form(const Mat& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("proj_se3_closed_form: expected a 4x4 matrix");
  }
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  const Eigen::Matrix3d a = m.topLeftCorner<3, 3>();
  out.topLeftCorner<3, 3>() = 0.5 * (a - a.transpose());
  out.topRightCorner<3, 1>() = m.topRightCorner<3, 1>();
  return out;
}

Eigen::Matrix4d se3_pose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation) {
  Eigen::Matrix4d x = Eigen::Matrix4d::Identity();
  x.topLeftCorner<3, 3>() = rotation;
  x.topRightCorner<3, 1>() = translation;
  return x;
}

}  // namespace ambient
