#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ambient/group.hpp"
#include "ambient/rng.hpp"

namespace ambient {

/// True state of Eq.-style dynamics g' = g xi together with the constant
/// velocity-measurement bias (b' = 0).
struct SystemState {
  Mat g;
  AlgebraElement b;
};

/// Time-indexed velocity xi(t) in the algebra, identified by a preset label.
class VelocityProfile {
 public:
  static VelocityProfile zero(const GroupDescriptor& desc);
  static VelocityProfile constant(const GroupDescriptor& desc, const Eigen::Vector3d& omega,
                                  const Eigen::Vector3d& v);
  /// Rotating-axis profile used by the SE(3) experiment:
  /// Omega = (-sin 10t, cos 10t, 0), v = (cos 0.5t, sin 0.5t, 0).
  static VelocityProfile se3_figure();
  /// Rotation-only reduction of the same profile.
  static VelocityProfile so3_figure();

  AlgebraElement at(double t) const { return fn_(t); }
  const std::string& label() const { return label_; }

 private:
  VelocityProfile(std::string label, std::function<AlgebraElement(double)> fn)
      : label_(std::move(label)), fn_(std::move(fn)) {}

  std::string label_;
  std::function<AlgebraElement(double)> fn_;
};

/// The SE(3) experiment's velocity at time t.
AlgebraElement se3_scenario_velocity(double t);

/// Right-hand side of g' = g xi.
Mat true_rhs(const Mat& g, const AlgebraElement& xi);

/// One exact-exponential step with midpoint-sampled velocity:
/// g <- g * exp(h * xi(t + h/2)). The bias is untouched.
SystemState propagate_true(const SystemState& state, const GroupDescriptor& desc,
                           const VelocityProfile& profile, double t, double h);

/// Constant invertible measurement frame A_m = F g, with cached inverse.
struct LandmarkFrame {
  Mat F;
  Mat F_inv;

  /// F = [s1 s2 s3 s4] from the landmarks (e1,1), (e2,1), (e3,1), (-e3,0).
  static LandmarkFrame se3_landmarks();
  static LandmarkFrame identity(int n);
  static LandmarkFrame from_matrix(Mat f);
};

struct NoiseConfig {
  double sigma = 0.0;
  std::uint64_t seed = 0;
  bool enabled = false;
};

struct Measurement {
  Mat A_m;
  AlgebraElement xi_m;
  double t = 0.0;
};

/// One named stream per noise channel: w (rotation), v (translation),
/// z (velocity, in algebra coordinates).
struct NoiseStreams {
  explicit NoiseStreams(std::uint64_t seed) : w(seed, "w"), v(seed, "v"), z(seed, "z") {}
  NormalStream w;
  NormalStream v;
  NormalStream z;
};

/// One realization of the per-step sensor perturbation.
struct NoiseDraws {
  Eigen::Vector3d w = Eigen::Vector3d::Zero();
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Vec z_coords;

  static NoiseDraws none(const GroupDescriptor& desc);
};

NoiseDraws draw_noise(NoiseStreams& streams, double sigma, const GroupDescriptor& desc);

/// Multiplicative rotation noise R exp(hat3(w)), additive translation noise;
/// the perturbed element stays on the group.
Mat perturb_state(const Mat& g, const NoiseDraws& draws, const GroupDescriptor& desc);

/// Measurement of a known state with a fixed perturbation realization:
/// A_m = F * perturb(g), xi_m = xi + b + z.
Measurement measure_with_draws(const SystemState& state, const AlgebraElement& xi,
                               const LandmarkFrame& frame, const NoiseDraws& draws,
                               const GroupDescriptor& desc, double t);

/// Draws fresh noise (if enabled) and measures. With noise disabled this
/// returns A_m = F g and xi_m = xi + b exactly.
Measurement measure(const SystemState& state, const AlgebraElement& xi,
                    const LandmarkFrame& frame, const NoiseConfig& noise,
                    NoiseStreams& streams, const GroupDescriptor& desc, double t);

}  // namespace ambient
