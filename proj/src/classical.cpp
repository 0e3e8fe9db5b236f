#include "dirac/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "step_common.hpp"

namespace dirac {

namespace {

const Complex kI(0.0, 1.0);

}  // namespace

MatrixMultiplier free_dirac_propagator(const SpectralGrid& grid, double t) {
  return MatrixMultiplier::from_wavenumber(grid, [t](int l) {
    const double ll = static_cast<double>(l);
    const double mu = std::sqrt(1.0 + ll * ll);
    return Complex(std::cos(t * mu)) * Mat2::identity() +
           Complex(0.0, -std::sin(t * mu) / mu) * free_dirac_symbol(l);
  });
}

SchemeState step_fd1(const SchemeState& state) {
  auto kernels = kernels_for(state);
  const SpinorField& phi = state.current;
  const GField g = g_field(phi, *state.cfg);
  const SpinorField rhs = phi - (kI * state.tau) * g.as_spinor();
  return detail::advance(state, apply_matrix_multiplier(kernels->resolvent, rhs),
                         kernels);
}

SchemeState step_fd2(const SchemeState& state) {
  auto kernels = kernels_for(state);
  const SpinorField& phi = state.current;
  const double tau = state.tau;
  const GField g = g_field(phi, *state.cfg);

  if (state.step_index == 0) {
    // -i alpha d_x has symbol l alpha.
    const auto& grid = phi.grid();
    const auto dirac_x = MatrixMultiplier::from_wavenumber(
        grid, [](int l) { return Complex(static_cast<double>(l)) * Mat2::alpha(); });
    const SpinorField rhs = apply_matrix_multiplier(dirac_x, phi) + g.as_spinor();
    SchemeState out = detail::advance(state, phi - (kI * tau) * rhs, kernels);
    out.previous = phi;
    return out;
  }
  if (!state.previous) {
    throw std::logic_error("step_fd2: previous level missing at step " +
                           std::to_string(state.step_index));
  }

  // (I + i tau l alpha) c^{n+1} = (I - i tau l alpha) c^{n-1} - 2 i tau g^n, per mode.
  const SpinorField prev = state.previous->to_spectral();
  const SpinorField gs = g.as_spinor().to_spectral();
  SpinorField next = SpinorField::zero(phi.grid(), Representation::spectral);
  const auto& grid = phi.grid();
  auto blocks = kernels->resolvent.blocks();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double tl = tau * grid.wavenumber(k);
    const Complex p1 = prev.phi1[k];
    const Complex p2 = prev.phi2[k];
    const Complex r1 = p1 - kI * tl * p2 - 2.0 * kI * tau * gs.phi1[k];
    const Complex r2 = p2 - kI * tl * p1 - 2.0 * kI * tau * gs.phi2[k];
    const Mat2& A = blocks[k];
    next.phi1[k] = A.a00 * r1 + A.a01 * r2;
    next.phi2[k] = A.a10 * r1 + A.a11 * r2;
  }
  SchemeState out = detail::advance(state, next.to_physical(), kernels);
  out.previous = phi;
  return out;
}

SchemeState step_ei1(const SchemeState& state) {
  auto kernels = kernels_for(state);
  const SpinorField& phi = state.current;
  const SpinorField g = potential_and_nonlinear(phi, *state.cfg);
  SpinorField next = apply_matrix_multiplier(kernels->exp_t, phi) -
                     (kI * state.tau) * apply_matrix_multiplier(kernels->phi1_t, g);
  SchemeState out = detail::advance(state, std::move(next), kernels);
  out.previous_g = GField::from_spinor(g);
  return out;
}

SchemeState step_ei2(const SchemeState& state) {
  if (state.step_index == 0) return step_ei1(state);
  if (!state.previous_g) {
    throw std::logic_error("step_ei2: G^{n-1} missing at step " +
                           std::to_string(state.step_index));
  }
  auto kernels = kernels_for(state);
  const SpinorField& phi = state.current;
  const double tau = state.tau;
  const SpinorField g = potential_and_nonlinear(phi, *state.cfg);
  const SpinorField dg = g - state.previous_g->as_spinor();
  SpinorField next = apply_matrix_multiplier(kernels->exp_t, phi) -
                     (kI * tau) * apply_matrix_multiplier(kernels->phi1_t, g) -
                     (kI * tau) * apply_matrix_multiplier(kernels->phi2_t, dg);
  SchemeState out = detail::advance(state, std::move(next), kernels);
  out.previous_g = GField::from_spinor(g);
  return out;
}

SchemeState step_lie(const SchemeState& state) {
  auto kernels = kernels_for(state);
  const SpinorField half = potential_phase_flow(state.current, state.tau, *state.cfg);
  return detail::advance(state, apply_matrix_multiplier(kernels->exp_t, half),
                         kernels);
}

SchemeState step_strang(const SchemeState& state) {
  auto kernels = kernels_for(state);
  const ModelConfig& cfg = *state.cfg;
  const SpinorField a = potential_phase_flow(state.current, 0.5 * state.tau, cfg);
  const SpinorField b = apply_matrix_multiplier(kernels->exp_t, a);
  return detail::advance(state, potential_phase_flow(b, 0.5 * state.tau, cfg),
                         kernels);
}

SpinorField lie_map(const SpinorField& phi, double tau, const ModelConfig& cfg) {
  return apply_matrix_multiplier(free_dirac_propagator(cfg.grid, tau),
                                 potential_phase_flow(phi, tau, cfg));
}

SpinorField strang_map(const SpinorField& phi, double tau, const ModelConfig& cfg) {
  const SpinorField a = potential_phase_flow(phi, 0.5 * tau, cfg);
  const SpinorField b = apply_matrix_multiplier(free_dirac_propagator(cfg.grid, tau), a);
  return potential_phase_flow(b, 0.5 * tau, cfg);
}

}  // namespace dirac
