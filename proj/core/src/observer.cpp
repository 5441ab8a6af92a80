#include "ambient/observer.hpp"

#include <stdexcept>

namespace ambient {

void validate(const Gains& gains) {
  if (!(gains.k1 > 0.0) || !(gains.k2 > 0.0)) {
    throw std::invalid_argument("Gains: k1 and k2 must be positive");
  }
}

ObserverDerivative observer_rhs(const ObserverState& obs, const Measurement& m,
                                const Gains& gains, const GroupDescriptor& desc) {
  validate(gains);
  if (m.A_m.rows() != obs.A_bar.rows() || m.A_m.cols() != obs.A_bar.cols()) {
    throw std::invalid_argument("observer_rhs: dimension mismatch");
  }
  const Mat innovation = m.A_m - obs.A_bar;
  ObserverDerivative d;
  d.dA_bar = m.A_m * (m.xi_m.matrix - obs.b_bar.matrix) + gains.k1 * innovation;
  d.db_bar = desc.project(m.A_m.transpose() * innovation);
  d.db_bar.coords *= -gains.k2;
  d.db_bar.matrix *= -gains.k2;
  return d;
}

ErrorPair error_terms(const SystemState& truth, const LandmarkFrame& frame,
                      const ObserverState& obs) {
  ErrorPair err;
  err.E_A = frame.F * truth.g - obs.A_bar;
  err.E_b.coords = truth.b.coords - obs.b_bar.coords;
  err.E_b.matrix = truth.b.matrix - obs.b_bar.matrix;
  err.norm_EA = err.E_A.norm();
  err.norm_Eb = err.E_b.matrix.norm();
  return err;
}

double lyapunov(const ErrorPair& err, const Gains& gains) {
  return 0.5 * gains.k2 * err.norm_EA * err.norm_EA + 0.5 * err.norm_Eb * err.norm_Eb;
}

double lyapunov_rate_analytic(const ErrorPair& err, const Gains& gains) {
  return -gains.k1 * gains.k2 * err.norm_EA * err.norm_EA;
}

}  // namespace ambient
