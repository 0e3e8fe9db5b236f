#include "dirac/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dirac/classical.hpp"
#include "dirac/uli.hpp"

namespace dirac {

std::string_view to_string(SchemeId id) noexcept {
  switch (id) {
    case SchemeId::FD1: return "FD1";
    case SchemeId::FD2: return "FD2";
    case SchemeId::EI1: return "EI1";
    case SchemeId::EI2: return "EI2";
    case SchemeId::LIE: return "LIE";
    case SchemeId::STRANG: return "STRANG";
    case SchemeId::ULI1: return "ULI1";
    case SchemeId::ULI2: return "ULI2";
  }
  return "?";
}

SchemeId parse_scheme(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (SchemeId id : kAllSchemes) {
    if (upper == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

int nominal_order(SchemeId id) noexcept {
  switch (id) {
    case SchemeId::FD1:
    case SchemeId::EI1:
    case SchemeId::LIE:
    case SchemeId::ULI1: return 1;
    default: return 2;
  }
}

SchemeState make_state(SpinorField phi0, double tau, std::shared_ptr<const ModelConfig> cfg) {
  if (!cfg) throw std::invalid_argument("make_state: missing model configuration");
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("make_state: tau must be a positive finite number");
  }
  if (!(phi0.grid() == cfg->grid)) throw std::invalid_argument("make_state: grid mismatch");
  SchemeState s{phi0.to_physical(), std::nullopt, std::nullopt, 0, tau, cfg, nullptr};
  s.kernels = make_kernels(tau, *cfg);
  return s;
}

std::shared_ptr<const StepKernels> kernels_for(const SchemeState& state) {
  if (state.kernels && state.kernels->tau == state.tau) return state.kernels;
  return make_kernels(state.tau, *state.cfg);
}

SchemeState step(SchemeId id, const SchemeState& state) {
  const bool poisson = state.cfg->kind() == PotentialKind::poisson;
  switch (id) {
    case SchemeId::FD1: return step_fd1(state);
    case SchemeId::FD2: return step_fd2(state);
    case SchemeId::EI1: return step_ei1(state);
    case SchemeId::EI2: return step_ei2(state);
    case SchemeId::LIE: return step_lie(state);
    case SchemeId::STRANG: return step_strang(state);
    case SchemeId::ULI1: return poisson ? step_uli1_dp(state) : step_uli1_ext(state);
    case SchemeId::ULI2: return poisson ? step_uli2_dp(state) : step_uli2_ext(state);
  }
  throw std::invalid_argument("step: unknown scheme");
}

}  // namespace dirac
