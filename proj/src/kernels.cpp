#include <stdexcept>

#include "dirac/schemes.hpp"

namespace dirac {

std::shared_ptr<const StepKernels> make_kernels(double tau, const ModelConfig& cfg) {
  if (!(tau > 0.0)) throw std::invalid_argument("make_kernels: tau must be > 0");
  const SpectralGrid& grid = cfg.grid;
  StepKernels k{
      tau,
      free_dirac_matrix_function(grid, MatrixFunction::exp, tau),
      free_dirac_matrix_function(grid, MatrixFunction::phi1, tau),
      free_dirac_matrix_function(grid, MatrixFunction::phi2, tau),
      fd_resolvent(grid, tau),
      translation_multiplier(grid, -tau),
      translation_multiplier(grid, tau),
      phi1_shift_multiplier(grid, 2.0 * tau),
      phi1_shift_multiplier(grid, -2.0 * tau),
      std::nullopt,
      std::nullopt,
  };
  if (const auto* ext = std::get_if<ExternalPotential>(&cfg.potential)) {
    k.v_phi1_tau = apply_scalar_multiplier(phi1_shift_multiplier(grid, tau), ext->v);
    k.v_phi1_mtau = apply_scalar_multiplier(phi1_shift_multiplier(grid, -tau), ext->v);
  }
  return std::make_shared<const StepKernels>(k);
}

}  // namespace dirac
