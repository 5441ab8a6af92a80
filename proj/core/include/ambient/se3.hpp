#pragma once

#include <Eigen/Dense>

#include <utility>

#include "ambient/matrix_ops.hpp"

namespace ambient {

/// 4x4 algebra element [hat3(omega), v; 0, 0].
Eigen::Matrix4d hat_se3(const Eigen::Vector3d& omega, const Eigen::Vector3d& v);

/// Inverse of hat_se3. Throws if m is not in the algebra within tol.
std::pair<Eigen::Vector3d, Eigen::Vector3d> vee_se3(const Eigen::Matrix4d& m,
                                                    double tol = 1e-9);

/// Closed-form exponential: Rodrigues rotation plus left-Jacobian
/// translation block.
Eigen::Matrix4d exp_se3(const Eigen::Vector3d& omega, const Eigen::Vector3d& v);

/// Closed-form orthogonal projection onto the algebra: keeps the skew part
/// of the rotation block and the translation column, zeroes the bottom row.
Eigen::Matrix4d proj_se3_closed_form(const Mat& m);

/// Homogeneous pose [R, p; 0, 1].
Eigen::Matrix4d se3_pose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

}  // namespace ambient
