#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ambient/matrix_ops.hpp"

namespace ambient {

/// Raised when an integration state stops being finite.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Classical 4-stage Runge-Kutta step on a flat state vector. The rhs is
/// evaluated at (x, t), (.., t + h/2) twice and (.., t + h); callers that
/// hold measurements fixed across the step bake that into rhs.
/// Throws NumericError if the result is not finite.
template <typename Rhs>
Eigen::VectorXd rk4_step(Rhs&& rhs, const Eigen::VectorXd& x, double t, double h) {
  if (h <= 0.0) throw std::invalid_argument("rk4_step: step must be positive");
  const Eigen::VectorXd k1 = rhs(x, t);
  const Eigen::VectorXd k2 = rhs(x + 0.5 * h * k1, t + 0.5 * h);
  const Eigen::VectorXd k3 = rhs(x + 0.5 * h * k2, t + 0.5 * h);
  const Eigen::VectorXd k4 = rhs(x + h * k3, t + h);
  Eigen::VectorXd out = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!out.allFinite()) {
    throw NumericError("rk4_step: state became non-finite at t = " + std::to_string(t));
  }
  return out;
}

}  // namespace ambient
