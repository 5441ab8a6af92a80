#include "ambient/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "ambient/rk4.hpp"
#include "ambient/se3.hpp"
#include "ambient/so3.hpp"

namespace ambient {
namespace {

constexpr double kGridTol = 1e-9;
constexpr double kSigmaMinFloor = 1e-12;

std::vector<std::string> scenario_problems(const Scenario& s) {
  std::vector<std::string> problems;
  const bool se3 = s.group == "SE3";
  const bool so3 = s.group == "SO3";
  if (!se3 && !so3) problems.push_back("group must be SE3 or SO3, got '" + s.group + "'");
  if (!(s.h > 0.0)) problems.push_back("h must be positive");
  if (!(s.t_end >= s.h)) problems.push_back("t_end must be at least one step");
  if (!(s.gains.k1 > 0.0)) problems.push_back("k1 must be positive");
  if (!(s.gains.k2 > 0.0)) problems.push_back("k2 must be positive");
  if (s.noise.sigma < 0.0) problems.push_back("noise sigma must be nonnegative");
  if (s.sample_dt > 0.0 && s.h > 0.0) {
    const double ratio = s.sample_dt / s.h;
    if (std::abs(ratio - std::round(ratio)) > kGridTol || ratio < 1.0 - kGridTol) {
      problems.push_back("sample_dt must be a positive integer multiple of h");
    }
  }
  if (s.profile == "se3-figure") {
    if (!se3) problems.push_back("profile se3-figure requires group SE3");
  } else if (s.profile == "so3-figure") {
    if (!so3) problems.push_back("profile so3-figure requires group SO3");
  } else if (s.profile != "zero" && s.profile != "constant") {
    problems.push_back("unknown profile '" + s.profile + "'");
  }
  if (s.max_trace_rows < 2) problems.push_back("max_trace_rows must be at least 2");
  return problems;
}

struct Setup {
  GroupDescriptor desc;
  LandmarkFrame frame;
  VelocityProfile profile;
  SystemState truth;
  ObserverState observer;
};

VelocityProfile make_profile(const Scenario& s, const GroupDescriptor& desc) {
  if (s.profile == "zero") return VelocityProfile::zero(desc);
  if (s.profile == "constant") return VelocityProfile::constant(desc, s.profile_omega, s.profile_v);
  if (s.profile == "se3-figure") return VelocityProfile::se3_figure();
  return VelocityProfile::so3_figure();
}

Mat pose_from_coords(const GroupPose& pose, const GroupDescriptor& desc) {
  if (desc.is_se3()) return se3_pose(exp_so3(pose.rotvec), pose.translation);
  return exp_so3(pose.rotvec);
}

Setup build_setup(const Scenario& s) {
  GroupDescriptor desc = s.group == "SE3" ? GroupDescriptor::se3() : GroupDescriptor::so3();
  LandmarkFrame frame =
      desc.is_se3() ? LandmarkFrame::se3_landmarks() : LandmarkFrame::identity(3);
  VelocityProfile profile = make_profile(s, desc);
  SystemState truth{pose_from_coords(s.initial_truth, desc),
                    desc.from_vectors(s.bias_omega, s.bias_v)};
  ObserverState observer{frame.F * pose_from_coords(s.initial_observer, desc),
                         desc.from_vectors(s.observer_bias_omega, s.observer_bias_v)};
  return {std::move(desc), std::move(frame), std::move(profile), std::move(truth),
          std::move(observer)};
}

// Fixed-step driver. The simulated true system holds the velocity at each
// sample interval's midpoint and flows exactly on the group; the observer
// integrates the measurement-driven vector field by RK4 at step h with
// stage-time measurements of that held flow. Noise realizations are drawn
// once per sample interval and frozen across its substeps and stages.
class Engine {
 public:
  using RowHook = std::function<void(double t, const SystemState&, const ObserverState&)>;

  Engine(const Scenario& scenario, Setup setup)
      : s_(scenario), setup_(std::move(setup)), streams_(scenario.noise.seed) {}

  // Returns false when the observer state stopped being finite.
  bool drive(const RowHook& hook) {
    const GroupDescriptor& desc = setup_.desc;
    const int n = desc.ambient_dim();
    const int d = desc.algebra_dim();
    const double h = s_.h;
    const double delta = s_.effective_sample_dt();
    const auto substeps_per_interval = static_cast<long>(std::round(delta / h));
    const auto total_substeps = static_cast<long>(std::floor(s_.t_end / h + kGridTol));
    const bool noisy = s_.noise.enabled && s_.noise.sigma > 0.0;

    SystemState truth = setup_.truth;
    ObserverState obs = setup_.observer;

    Eigen::VectorXd x(n * n + d);
    auto pack = [&](const ObserverState& o) {
      x.head(n * n) = Eigen::Map<const Eigen::VectorXd>(o.A_bar.data(), n * n);
      x.tail(d) = o.b_bar.coords;
    };
    auto unpack = [&](const Eigen::VectorXd& v, ObserverState& o) {
      o.A_bar = Eigen::Map<const Mat>(v.head(n * n).data(), n, n);
      o.b_bar = desc.from_coords(v.tail(d));
    };
    pack(obs);

    long k = 0;  // global substep index
    for (long j = 0; k < total_substeps; ++j) {
      const long m = std::min(substeps_per_interval, total_substeps - k);
      const double t_mid = (m == substeps_per_interval)
                               ? (static_cast<double>(j) + 0.5) * delta
                               : static_cast<double>(j) * delta + 0.5 * static_cast<double>(m) * h;
      const AlgebraElement xi_held = setup_.profile.at(t_mid);
      const NoiseDraws draws = noisy ? draw_noise(streams_, s_.noise.sigma, desc)
                                     : NoiseDraws::none(desc);
      const AlgebraElement xi_m =
          desc.from_coords(xi_held.coords + truth.b.coords + draws.z_coords);

      // Exact half-step flow of the held system; stage states advance by one
      // product each, so measurements are exact samples of the truth.
      AlgebraElement half = xi_held;
      half.coords *= 0.5 * h;
      half.matrix *= 0.5 * h;
      const Mat flow_half = desc.exp(half);

      Mat g_stage = truth.g;
      for (long i = 0; i < m; ++i, ++k) {
        const double t = static_cast<double>(k) * h;
        truth.g = g_stage;
        hook(t, truth, obs);

        Mat a_m[3];
        for (int stage = 0; stage < 3; ++stage) {
          a_m[stage] = noisy ? setup_.frame.F * perturb_state(g_stage, draws, desc)
                             : setup_.frame.F * g_stage;
          if (stage < 2) g_stage = (g_stage * flow_half).eval();
        }

        auto rhs = [&](const Eigen::VectorXd& state, double tau) -> Eigen::VectorXd {
          const int stage = static_cast<int>(std::lround((tau - t) / (0.5 * h)));
          ObserverState o;
          o.A_bar = Eigen::Map<const Mat>(state.head(n * n).data(), n, n);
          o.b_bar = desc.from_coords(state.tail(d));
          const Measurement meas{a_m[stage], xi_m, tau};
          const ObserverDerivative der = observer_rhs(o, meas, s_.gains, desc);
          Eigen::VectorXd out(n * n + d);
          out.head(n * n) = Eigen::Map<const Eigen::VectorXd>(der.dA_bar.data(), n * n);
          out.tail(d) = der.db_bar.coords;
          return out;
        };

        try {
          x = rk4_step(rhs, x, t, h);
        } catch (const NumericError& e) {
          abort_reason_ = e.what();
          return false;
        }
        unpack(x, obs);
      }
      truth.g = g_stage;
    }
    hook(static_cast<double>(total_substeps) * h, truth, obs);
    return true;
  }

  const std::string& abort_reason() const { return abort_reason_; }
  ObserverState& initial_observer() { return setup_.observer; }
  const Setup& setup() const { return setup_; }
  long planned_rows() const {
    return static_cast<long>(std::floor(s_.t_end / s_.h + kGridTol)) + 1;
  }

 private:
  Scenario s_;
  Setup setup_;
  NoiseStreams streams_;
  std::string abort_reason_;
};

}  // namespace

void validate(const Scenario& scenario) {
  const auto problems = scenario_problems(scenario);
  if (problems.empty()) return;
  std::string msg = "invalid scenario:";
  for (const auto& p : problems) msg += "\n  - " + p;
  throw std::invalid_argument(msg);
}

RunResult run(const Scenario& scenario) {
  validate(scenario);
  Engine engine(scenario, build_setup(scenario));
  const Setup& setup = engine.setup();

  const long planned = engine.planned_rows();
  const long stride =
      (planned + static_cast<long>(scenario.max_trace_rows) - 1) /
      static_cast<long>(scenario.max_trace_rows);
  const long last = planned - 1;

  RunResult result;
  result.trace.reserve(static_cast<std::size_t>(planned / std::max<long>(stride, 1) + 2));
  AssumptionReport& rep = result.assumptions;
  rep.M_hat = 0.0;
  rep.L_hat = std::numeric_limits<double>::infinity();
  rep.R_hat = 0.0;

  long row_index = 0;
  double current_xi_norm = 0.0;
  const double delta = scenario.effective_sample_dt();
  auto hook = [&](double t, const SystemState& truth, const ObserverState& obs) {
    const long k = row_index++;
    if (stride > 1 && k % stride != 0 && k != last) return;
    // Velocity actually driving the simulated system: the held midpoint sample.
    const long interval = std::min(
        static_cast<long>(t / delta + kGridTol),
        static_cast<long>(std::ceil(scenario.t_end / delta)) - 1);
    const double t_mid = (static_cast<double>(interval) + 0.5) * delta;
    current_xi_norm = setup.profile.at(std::min(t_mid, scenario.t_end)).matrix.norm();

    const ErrorPair err = error_terms(truth, setup.frame, obs);
    const auto [smin, smax] = singular_value_extremes(truth.g);
    const MembershipResult member = setup.desc.membership_residual(truth.g);
    TraceRow row{t,
                 err.norm_EA,
                 err.norm_Eb,
                 lyapunov(err, scenario.gains),
                 member.residual,
                 smin,
                 smax,
                 current_xi_norm};
    result.trace.push_back(row);
    rep.M_hat = std::max(rep.M_hat, row.xi_norm);
    rep.L_hat = std::min(rep.L_hat, smin);
    rep.R_hat = std::max(rep.R_hat, smax);
  };

  const bool finished = engine.drive(hook);
  if (!finished) {
    result.aborted = true;
    result.abort_reason = engine.abort_reason();
  }
  rep.state_nonsingular = rep.L_hat > kSigmaMinFloor;
  return result;
}

RateFit fit_exponential_rate(const SimulationTrace& trace, double t_start, double t_end,
                             TraceColumn column) {
  if (!(t_start < t_end)) throw std::invalid_argument("fit: empty window");
  auto value = [column](const TraceRow& row) {
    switch (column) {
      case TraceColumn::err_A: return row.err_A;
      case TraceColumn::err_b: return row.err_b;
      case TraceColumn::V: return row.V;
    }
    return row.err_A;
  };

  double sum_t = 0.0, sum_y = 0.0;
  long count = 0;
  for (const TraceRow& row : trace) {
    if (row.t < t_start || row.t > t_end) continue;
    const double v = value(row);
    if (!(v > 0.0)) {
      throw std::domain_error(
          "fit_exponential_rate: nonpositive value in window (noise floor reached); "
          "shrink the window");
    }
    sum_t += row.t;
    sum_y += std::log(v);
    ++count;
  }
  if (count < 2) throw std::invalid_argument("fit: window selects fewer than two rows");

  const double mean_t = sum_t / static_cast<double>(count);
  const double mean_y = sum_y / static_cast<double>(count);
  double s_tt = 0.0, s_ty = 0.0, s_yy = 0.0;
  for (const TraceRow& row : trace) {
    if (row.t < t_start || row.t > t_end) continue;
    const double dt = row.t - mean_t;
    const double dy = std::log(value(row)) - mean_y;
    s_tt += dt * dt;
    s_ty += dt * dy;
    s_yy += dy * dy;
  }
  if (s_yy < 1e-30) return {0.0, 0.0, true};  // constant column
  const double slope = s_ty / s_tt;
  const double r2 = (s_ty * s_ty) / (s_tt * s_yy);
  return {slope, r2, false};
}

double linearity_check(const Scenario& scenario, double alpha) {
  validate(scenario);
  if (scenario.noise.enabled && scenario.noise.sigma > 0.0) {
    throw std::invalid_argument("linearity_check: requires a noiseless scenario");
  }
  if (alpha == 0.0) {
    throw std::invalid_argument("linearity_check: alpha = 0 is degenerate");
  }

  struct ErrTrace {
    std::vector<Mat> e_a;
    std::vector<Vec> e_b;
  };
  auto run_errors = [&](double scale) {
    Engine engine(scenario, build_setup(scenario));
    if (scale != 1.0) {
      Setup fresh = build_setup(scenario);
      const Mat a_true = fresh.frame.F * fresh.truth.g;
      ObserverState& obs = engine.initial_observer();
      obs.A_bar = a_true - scale * (a_true - obs.A_bar);
      const Vec disp = fresh.truth.b.coords - obs.b_bar.coords;
      obs.b_bar = fresh.desc.from_coords(fresh.truth.b.coords - scale * disp);
    }
    ErrTrace errs;
    const bool ok = engine.drive([&](double, const SystemState& truth, const ObserverState& obs) {
      const ErrorPair err = error_terms(truth, engine.setup().frame, obs);
      errs.e_a.push_back(err.E_A);
      errs.e_b.push_back(err.E_b.coords);
    });
    if (!ok) throw NumericError("linearity_check: run aborted: " + engine.abort_reason());
    return errs;
  };

  const ErrTrace base = run_errors(1.0);
  const ErrTrace scaled = run_errors(alpha);

  double worst = 0.0;
  for (std::size_t i = 0; i < base.e_a.size(); ++i) {
    const double num = std::sqrt((scaled.e_a[i] - alpha * base.e_a[i]).squaredNorm() +
                                 (scaled.e_b[i] - alpha * base.e_b[i]).squaredNorm());
    const double den =
        alpha * std::sqrt(base.e_a[i].squaredNorm() + base.e_b[i].squaredNorm()) + 1e-12;
    worst = std::max(worst, num / den);
  }
  return worst;
}

}  // namespace ambient
