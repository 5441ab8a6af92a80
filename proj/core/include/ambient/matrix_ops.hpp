#pragma once

#include <Eigen/Dense>

#include <utility>

namespace ambient {

// Dense ambient-space matrix. The design envelope is small (n <= 8).
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Trace inner product trace(A^T B).
double frob_inner(const Mat& a, const Mat& b);

/// Norm induced by frob_inner.
double frob_norm(const Mat& a);

/// Matrix exponential by scaling-and-squaring over a truncated Taylor
/// series (termwise tolerance 1e-15). Group-agnostic fallback; the SO(3)
/// and SE(3) closed forms are preferred where they apply.
Mat exp_generic(const Mat& m);

/// (sigma_min, sigma_max) computed from the eigenvalues of g^T g.
std::pair<double, double> singular_value_extremes(const Mat& g);

}  // namespace ambient
