#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ambient/observer.hpp"
#include "ambient/systems.hpp"

namespace ambient {

/// Initial condition in group coordinates (rotation vector + translation;
/// the translation is ignored on SO(3)).
struct GroupPose {
  Eigen::Vector3d rotvec = Eigen::Vector3d::Zero();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
};

/**
 * Full experiment definition. The simulated true system holds the velocity
 * constant over each sample interval (midpoint-sampled), so it is defined
 * by sample_dt alone; the integrator step h may refine below sample_dt
 * (h must divide it) without changing the system under test. With
 * sample_dt = 0 the sample interval equals h.
 */
struct Scenario {
  std::string label = "custom";
  std::string group = "SE3";  // "SE3" | "SO3"
  double t_end = 15.0;
  double h = 1e-3;
  double sample_dt = 0.0;
  Gains gains;
  std::string profile = "se3-figure";  // zero | constant | se3-figure | so3-figure
  Eigen::Vector3d profile_omega = Eigen::Vector3d::Zero();  // for "constant"
  Eigen::Vector3d profile_v = Eigen::Vector3d::Zero();
  Eigen::Vector3d bias_omega = Eigen::Vector3d::Zero();
  Eigen::Vector3d bias_v = Eigen::Vector3d::Zero();
  NoiseConfig noise;
  GroupPose initial_truth;
  GroupPose initial_observer;
  Eigen::Vector3d observer_bias_omega = Eigen::Vector3d::Zero();  // b_bar(0)
  Eigen::Vector3d observer_bias_v = Eigen::Vector3d::Zero();
  std::size_t max_trace_rows = 1000000;

  double effective_sample_dt() const { return sample_dt > 0.0 ? sample_dt : h; }
};

/// Throws std::invalid_argument describing every problem found.
void validate(const Scenario& scenario);

struct TraceRow {
  double t;
  double err_A;
  double err_b;
  double V;
  double membership;
  double sigma_min;
  double sigma_max;
  double xi_norm;
};

using SimulationTrace = std::vector<TraceRow>;

/// Empirical bounds for the boundedness assumptions: M_hat = sup ||xi||,
/// L_hat = inf sigma_min(g), R_hat = sup sigma_max(g).
struct AssumptionReport {
  double M_hat = 0.0;
  double L_hat = 0.0;
  double R_hat = 0.0;
  bool state_nonsingular = true;  // L_hat above 1e-12

  bool ok() const { return state_nonsingular && std::isfinite(M_hat); }
};

struct RunResult {
  SimulationTrace trace;
  AssumptionReport assumptions;
  bool aborted = false;
  std::string abort_reason;
};

/// Fixed-step joint integration: truth by exact-exponential steps, observer
/// by RK4 on the observer vector field with stage-time measurements of the
/// held-velocity flow; noise draws are frozen across each sample interval.
/// Deterministic given the scenario seed. A non-finite observer state stops
/// the run and returns the trace up to the last valid row with the aborted
/// flag set; an assumption violation only flags the report.
RunResult run(const Scenario& scenario);

struct RateFit {
  double rate = 0.0;
  double r_squared = 0.0;
  bool degenerate = false;  // constant data: R^2 undefined, reported as 0
};

enum class TraceColumn { err_A, err_b, V };

/// Least-squares line through (t, ln value) over [t_start, t_end].
/// Throws std::domain_error if the window contains nonpositive values
/// (noise floor reached; shrink the window), std::invalid_argument if the
/// window selects fewer than two rows.
RateFit fit_exponential_rate(const SimulationTrace& trace, double t_start, double t_end,
                             TraceColumn column);

/// Runs the scenario twice, the second time with the initial observer
/// displacement scaled by alpha, and returns
///   max_t ||err2(t) - alpha err1(t)|| / (alpha ||err1(t)|| + 1e-12)
/// over the combined (E_A, E_b) error. Requires a noiseless scenario and
/// alpha != 0.
double linearity_check(const Scenario& scenario, double alpha);

}  // namespace ambient
