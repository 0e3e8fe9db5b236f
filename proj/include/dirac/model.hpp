#pragma once

#include <utility>
#include <variant>

#include "dirac/field.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

/// Given real-valued potential V_e(x).
struct ExternalPotential {
  ComplexField v;
};

/// V = -d_xx^{-1} |Phi|^2 with zero mean, recomputed from the state.
struct PoissonPotential {};

using Potential = std::variant<ExternalPotential, PoissonPotential>;

enum class PotentialKind { external, poisson };

struct ModelConfig {
  SpectralGrid grid;
  double lambda = 1.0;
  Potential potential = PoissonPotential{};
  /// Apply 2/3-rule truncation to the state after every step.
  bool dealias = false;

  PotentialKind kind() const noexcept {
    return std::holds_alternative<PoissonPotential>(potential) ? PotentialKind::poisson
                                                               : PotentialKind::external;
  }
};

/// Validates that v is real-valued and lives on grid.
ModelConfig make_external_config(const SpectralGrid& grid, double lambda, ComplexField v);
ModelConfig make_poisson_config(const SpectralGrid& grid, double lambda);

/// V_e(x) = 2 sin x, the potential used throughout the experiments.
ComplexField default_external_potential(const SpectralGrid& grid);

/// G = (G1, G2)^T, the inhomogeneity entering the second-order schemes.
struct GField {
  ComplexField g1;
  ComplexField g2;

  SpinorField as_spinor() const { return {g1, g2}; }
  static GField from_spinor(SpinorField s) { return {std::move(s.phi1), std::move(s.phi2)}; }
};

/// lambda (|phi1|^2 - |phi2|^2) beta Phi.
SpinorField thirring_nonlinearity(const SpinorField& phi, double lambda);

/// (phi1 + phi2, phi1 - phi2).
std::pair<ComplexField, ComplexField> plus_minus(const SpinorField& phi);

enum class Projection { plus, minus };

/// Pi+ = 1/2 [[1,1],[1,1]], Pi- = 1/2 [[1,-1],[-1,1]].
SpinorField project(const SpinorField& phi, Projection sign);

/// e^{s alpha d_x} Phi = e^{s d_x} Pi+ Phi + e^{-s d_x} Pi- Phi.
SpinorField shift_propagator(const SpinorField& phi, double s);
/// Same, with the translations e^{s d_x} and e^{-s d_x} supplied.
SpinorField shift_propagator(const SpinorField& phi, const ScalarMultiplier& forward,
                             const ScalarMultiplier& backward);

/// |phi1|^2 + |phi2|^2.
ComplexField density(const SpinorField& phi);

/// |phi1|^2 - |phi2|^2.
ComplexField density_difference(const SpinorField& phi);

/// V for the configured potential kind, real-valued, physical.
ComplexField potential_field(const SpinorField& phi, const ModelConfig& cfg);

/// V Phi + F(Phi), the part of G treated explicitly by the exponential
/// integrators (beta is absorbed in the free Dirac operator there).
SpinorField potential_and_nonlinear(const SpinorField& phi, const ModelConfig& cfg);

/// G = beta Phi + V Phi + F(Phi), with V from potential_field.
GField g_field(const SpinorField& phi, const ModelConfig& cfg);

/// N'(Phi)(iG) for the configured model. External:
///   i lambda (|phi1|^2-|phi2|^2) beta G + 2 lambda Im[phi1 conj(G1) + conj(phi2) G2] beta Phi.
/// Poisson adds
///   -(d_xx^{-1}|Phi|^2)(iG) - 2 (d_xx^{-1} Im[phi1 conj(G1) - conj(phi2) G2]) Phi.
SpinorField gateaux_term(const SpinorField& phi, const GField& g, const ModelConfig& cfg);

/// The nonlinear operator N whose derivative gateaux_term evaluates:
/// F(Phi) for the external model, -(d_xx^{-1}|Phi|^2)Phi + F(Phi) for Poisson.
SpinorField nonlinear_operator(const SpinorField& phi, const ModelConfig& cfg);

/// Exact flow of i d_t Phi = (V + lambda (|phi1|^2 - |phi2|^2) beta) Phi over
/// time t; the density is invariant so V and g are taken from the input.
SpinorField potential_phase_flow(const SpinorField& phi, double t, const ModelConfig& cfg);

}  // namespace dirac
