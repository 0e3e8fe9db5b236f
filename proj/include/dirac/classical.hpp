#pragma once

#include "dirac/schemes.hpp"

namespace dirac {

// Baseline integrators. Every stepper maps a state to the next one and never
// mutates its input. For the Poisson model V is recomputed from the state
// at the entry of each (sub)step.

/// (I + tau alpha d_x) Phi^{n+1} = Phi^n - i tau G^n.
SchemeState step_fd1(const SchemeState& state);

/// Leapfrog/Crank-Nicolson pair; step 0 is the Taylor start
/// Phi^1 = Phi^0 - i tau [-i alpha d_x Phi^0 + G^0].
/// Throws std::logic_error when the previous level is missing at n >= 1.
SchemeState step_fd2(const SchemeState& state);

/// Phi^{n+1} = e^{-i tau T} Phi^n - i tau phi1(-i tau T) (V Phi^n + F(Phi^n)).
SchemeState step_ei1(const SchemeState& state);

/// EI1 plus -i tau phi2(-i tau T)(G^n - G^{n-1}); step 0 is an EI1 step.
/// Throws std::logic_error when G^{n-1} is missing at n >= 1.
SchemeState step_ei2(const SchemeState& state);

/// Potential flow over tau, then the free flow e^{-i tau T}.
SchemeState step_lie(const SchemeState& state);

/// Half potential flow, free flow, half potential flow.
SchemeState step_strang(const SchemeState& state);

/// e^{-i t T} for any real t (t < 0 gives the inverse flow).
MatrixMultiplier free_dirac_propagator(const SpectralGrid& grid, double t);

/// Lie and Strang maps for an arbitrary real step (negative steps give
/// the adjoint maps).
SpinorField lie_map(const SpinorField& phi, double tau, const ModelConfig& cfg);
SpinorField strang_map(const SpinorField& phi, double tau, const ModelConfig& cfg);

}  // namespace dirac
