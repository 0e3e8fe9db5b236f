#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "dirac/model.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

enum class SchemeId { FD1, FD2, EI1, EI2, LIE, STRANG, ULI1, ULI2 };

inline constexpr std::array<SchemeId, 8> kAllSchemes = {
    SchemeId::FD1,  SchemeId::FD2,    SchemeId::EI1,  SchemeId::EI2,
    SchemeId::LIE,  SchemeId::STRANG, SchemeId::ULI1, SchemeId::ULI2};

std::string_view to_string(SchemeId id) noexcept;
/// Case-insensitive; throws std::invalid_argument for unknown names.
SchemeId parse_scheme(std::string_view name);
/// Nominal temporal order for smooth solutions.
int nominal_order(SchemeId id) noexcept;

/// Fourier multipliers that depend only on (tau, model) and are reused
/// every step.
struct StepKernels {
  double tau;
  MatrixMultiplier exp_t;      // e^{-i tau T}
  MatrixMultiplier phi1_t;     // phi1(-i tau T)
  MatrixMultiplier phi2_t;     // phi2(-i tau T)
  MatrixMultiplier resolvent;  // (I + tau alpha d_x)^{-1}
  ScalarMultiplier shift_minus;  // e^{-tau d_x}
  ScalarMultiplier shift_plus;   // e^{+tau d_x}
  ScalarMultiplier phi1_2tau;    // phi1(2 tau d_x)
  ScalarMultiplier phi1_m2tau;   // phi1(-2 tau d_x)
  // phi1(+-tau d_x) V for an external potential.
  std::optional<ComplexField> v_phi1_tau;
  std::optional<ComplexField> v_phi1_mtau;
};

std::shared_ptr<const StepKernels> make_kernels(double tau, const ModelConfig& cfg);

/// Current level plus whatever history a two-level scheme carries.
struct SchemeState {
  SpinorField current;
  std::optional<SpinorField> previous;  // FD2
  std::optional<GField> previous_g;     // EI2
  long step_index = 0;
  double tau = 0.0;
  std::shared_ptr<const ModelConfig> cfg;
  std::shared_ptr<const StepKernels> kernels;
};

/// Throws std::invalid_argument unless tau > 0 and phi0 is on cfg's grid.
SchemeState make_state(SpinorField phi0, double tau, std::shared_ptr<const ModelConfig> cfg);

/// Kernels of the state, rebuilt when missing or built for another tau.
std::shared_ptr<const StepKernels> kernels_for(const SchemeState& state);

/// One step of the given scheme. The potential kind is taken from the
/// state's configuration (ULI1/ULI2 select the external or Poisson variant).
SchemeState step(SchemeId id, const SchemeState& state);

}  // namespace dirac
