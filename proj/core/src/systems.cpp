#include "ambient/systems.hpp"

#include <cmath>
#include <stdexcept>

#include "ambient/se3.hpp"
#include "ambient/so3.hpp"

namespace ambient {

VelocityProfile VelocityProfile::zero(const GroupDescriptor& desc) {
  const int d = desc.algebra_dim();
  const int n = desc.ambient_dim();
  return VelocityProfile("zero", [d, n](double) {
    return AlgebraElement{Vec::Zero(d), Mat::Zero(n, n)};
  });
}

VelocityProfile VelocityProfile::constant(const GroupDescriptor& desc,
                                          const Eigen::Vector3d& omega,
                                          const Eigen::Vector3d& v) {
  AlgebraElement xi = desc.from_vectors(omega, v);
  return VelocityProfile("constant", [xi](double) { return xi; });
}

VelocityProfile VelocityProfile::se3_figure() {
  return VelocityProfile("se3-figure", [](double t) { return se3_scenario_velocity(t); });
}

VelocityProfile VelocityProfile::so3_figure() {
  static const GroupDescriptor desc = GroupDescriptor::so3();
  return VelocityProfile("so3-figure", [](double t) {
    const Eigen::Vector3d omega(-std::sin(10.0 * t), std::cos(10.0 * t), 0.0);
    return desc.from_vectors(omega, Eigen::Vector3d::Zero());
  });
}

AlgebraElement se3_scenario_velocity(double t) {
  static const GroupDescriptor desc = GroupDescriptor::se3();
  const Eigen::Vector3d omega(-std::sin(10.0 * t), std::cos(10.0 * t), 0.0);
  const Eigen::Vector3d v(std::cos(0.5 * t), std::sin(0.5 * t), 0.0);
  return desc.from_vectors(omega, v);
}

Mat true_rhs(const Mat& g, const AlgebraElement& xi) {
  if (g.cols() != xi.matrix.rows()) {
    throw std::invalid_argument("true_rhs: dimension mismatch");
  }
  return g * xi.matrix;
}

SystemState propagate_true(const SystemState& state, const GroupDescriptor& desc,
                           const VelocityProfile& profile, double t, double h) {
  if (h <= 0.0) throw std::invalid_argument("propagate_true: step must be positive");
  AlgebraElement xi = profile.at(t + 0.5 * h);
  xi.coords *= h;
  xi.matrix *= h;
  return {state.g * desc.exp(xi), state.b};
}

LandmarkFrame LandmarkFrame::se3_landmarks() {
  Mat f(4, 4);
  f << 1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 1, -1,
       1, 1, 1, 0;
  return from_matrix(f);
}

LandmarkFrame LandmarkFrame::identity(int n) {
  return {Mat::Identity(n, n), Mat::Identity(n, n)};
}

LandmarkFrame LandmarkFrame::from_matrix(Mat f) {
  Eigen::FullPivLU<Mat> lu(f);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("LandmarkFrame: measurement frame must be invertible");
  }
  Mat inv = lu.inverse();
  return {std::move(f), std::move(inv)};
}

NoiseDraws NoiseDraws::none(const GroupDescriptor& desc) {
  NoiseDraws d;
  d.z_coords = Vec::Zero(desc.algebra_dim());
  return d;
}

NoiseDraws draw_noise(NoiseStreams& streams, double sigma, const GroupDescriptor& desc) {
  NoiseDraws d;
  d.w = sigma * streams.w.next3();
  d.v = sigma * streams.v.next3();
  d.z_coords = sigma * streams.z.next_n(desc.algebra_dim());
  return d;
}

Mat perturb_state(const Mat& g, const NoiseDraws& draws, const GroupDescriptor& desc) {
  if (desc.is_so3()) {
    return g * exp_so3(draws.w);
  }
  if (desc.is_se3()) {
    const Eigen::Matrix3d r_m = g.topLeftCorner<3, 3>() * exp_so3(draws.w);
    const Eigen::Vector3d p_m = g.topRightCorner<3, 1>() + draws.v;
    return se3_pose(r_m, p_m);
  }
  throw std::invalid_argument("perturb_state: noise model is defined for SO3/SE3 only");
}

Measurement measure_with_draws(const SystemState& state, const AlgebraElement& xi,
                               const LandmarkFrame& frame, const NoiseDraws& draws,
                               const GroupDescriptor& desc, double t) {
  Measurement m;
  m.t = t;
  m.A_m = frame.F * perturb_state(state.g, draws, desc);
  m.xi_m = desc.from_coords(xi.coords + state.b.coords + draws.z_coords);
  return m;
}

Measurement measure(const SystemState& state, const AlgebraElement& xi,
                    const LandmarkFrame& frame, const NoiseConfig& noise,
                    NoiseStreams& streams, const GroupDescriptor& desc, double t) {
  if (noise.enabled && noise.sigma > 0.0) {
    return measure_with_draws(state, xi, frame, draw_noise(streams, noise.sigma, desc), desc, t);
  }
  // Exact measurement path: A_m = F g, xi_m = xi + b.
  Measurement m;
  m.t = t;
  m.A_m = frame.F * state.g;
  m.xi_m = desc.from_coords(xi.coords + state.b.coords);
  return m;
}

}  // namespace ambient
