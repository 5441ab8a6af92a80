#pragma once

#include <Eigen/Dense>

namespace ambient {

/// Skew matrix of the cross product: hat3(x) * y == x.cross(y).
Eigen::Matrix3d hat3(const Eigen::Vector3d& x);

/// Inverse of hat3. Throws if m is not skew-symmetric within tol.
Eigen::Vector3d vee3(const Eigen::Matrix3d& m, double tol = 1e-9);

/// Rodrigues rotation exp(hat3(omega)); series coefficients below
/// theta < 1e-4 to avoid cancellation.
Eigen::Matrix3d exp_so3(const Eigen::Vector3d& omega);

}  // namespace ambient
