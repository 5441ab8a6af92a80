#pragma once

#include "ambient/group.hpp"
#include "ambient/systems.hpp"

namespace ambient {

/// Observer gains; both must be positive.
struct Gains {
  double k1 = 2.0;
  double k2 = 10.0;
};

void validate(const Gains& gains);  // throws std::invalid_argument

/**
 * Ambient-space observer state: the estimate A_bar lives in the full
 * matrix space R^{n x n} and is deliberately never projected onto the
 * group; the bias estimate b_bar lives in the algebra and is carried in
 * basis coordinates, so it stays there exactly.
 */
struct ObserverState {
  Mat A_bar;
  AlgebraElement b_bar;
};

struct ObserverDerivative {
  Mat dA_bar;
  AlgebraElement db_bar;
};

/// Estimation errors E_A = A - A_bar (with A = F g) and E_b = b - b_bar,
/// together with their norms.
struct ErrorPair {
  Mat E_A;
  AlgebraElement E_b;
  double norm_EA = 0.0;
  double norm_Eb = 0.0;
};

/// Observer vector field:
///   dA_bar = A_m xi_m + k1 (A_m - A_bar) - A_m b_bar
///   db_bar = -k2 proj(A_m^T (A_m - A_bar))
/// db_bar lies in the algebra by construction.
ObserverDerivative observer_rhs(const ObserverState& obs, const Measurement& m,
                                const Gains& gains, const GroupDescriptor& desc);

ErrorPair error_terms(const SystemState& truth, const LandmarkFrame& frame,
                      const ObserverState& obs);

/// V = (k2/2) <E_A, E_A> + (1/2) <E_b, E_b>.
double lyapunov(const ErrorPair& err, const Gains& gains);

/// Closed-form dV/dt along the noiseless error dynamics: -k1 k2 ||E_A||^2.
double lyapunov_rate_analytic(const ErrorPair& err, const Gains& gains);

}  // namespace ambient
