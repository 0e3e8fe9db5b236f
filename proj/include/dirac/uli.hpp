#pragma once

#include "dirac/schemes.hpp"

namespace dirac {

/// The three integrals of the twisted Duhamel formula over one step,
///   I1 = int_0^tau e^{r alpha d_x} beta e^{-r alpha d_x} Phi dr,
///   I2 = int_0^tau e^{r alpha d_x} V e^{-r alpha d_x} Phi dr,
///   I3 = int_0^tau e^{r alpha d_x} F(e^{-r alpha d_x} Phi) dr,
/// evaluated exactly in Fourier space.
struct UliIntegrals {
  SpinorField i1;
  SpinorField i2;
  SpinorField i3;
};

/// Closed forms for a given external potential V.
UliIntegrals uli1_integrals_ext(const SpinorField& phi, double tau, const ComplexField& v,
                                double lambda);

/// I1 alone: tau [phi1(2 tau d_x) beta Pi- + phi1(-2 tau d_x) beta Pi+] Phi.
SpinorField uli1_integral1(const SpinorField& phi, double tau);

/// I3 alone, tau lambda / 4 times the phi_+- component form.
SpinorField uli1_integral3(const SpinorField& phi, double tau, double lambda);

/// Self-consistent Poisson replacement of I2,
///   I2 = -int_0^tau e^{r alpha d_x} (d_xx^{-1} |e^{-r alpha d_x} Phi|^2) e^{-r alpha d_x} Phi dr.
SpinorField uli1_integral2_dp(const SpinorField& phi, double tau);

/// First-order map Theta(Phi) = e^{-tau alpha d_x}(Phi - i (I1 + I2 + I3)) for
/// the configured potential kind. tau >= 0.
SpinorField uli1_map(const SpinorField& phi, double tau, const ModelConfig& cfg);

/// Second-order map Theta(Phi) - (tau^2/2) L G + (i tau^2 / 2) N'(Phi)(iG) with
/// L = beta + V (external) or beta (Poisson). tau >= 0.
SpinorField uli2_map(const SpinorField& phi, double tau, const ModelConfig& cfg);

/// Steppers; the _ext variants require an external potential and the _dp
/// variants the Poisson model (std::invalid_argument otherwise).
SchemeState step_uli1_ext(const SchemeState& state);
SchemeState step_uli1_dp(const SchemeState& state);
SchemeState step_uli2_ext(const SchemeState& state);
SchemeState step_uli2_dp(const SchemeState& state);

}  // namespace dirac
