#include "dirac/uli.hpp"

#include <stdexcept>

#include "step_common.hpp"

namespace dirac {

namespace {

const Complex kI(0.0, 1.0);

// Builds the spinor a (1,1)^T + b (1,-1)^T.
SpinorField from_eigencomponents(const ComplexField& a, const ComplexField& b) {
  return {a + b, a - b};
}

SpinorField integral1(const SpinorField& phi, double tau, const ScalarMultiplier& p2,
                      const ScalarMultiplier& m2) {
  // beta Pi- Phi = (phi_-/2)(1,1), beta Pi+ Phi = (phi_+/2)(1,-1).
  const auto [pp, pm] = plus_minus(phi);
  return from_eigencomponents((0.5 * tau) * apply_scalar_multiplier(p2, pm),
                              (0.5 * tau) * apply_scalar_multiplier(m2, pp));
}

SpinorField integral2_ext(const SpinorField& phi, double tau, const ComplexField& v_pos,
                          const ComplexField& v_neg) {
  const auto [pp, pm] = plus_minus(phi);
  return from_eigencomponents((0.5 * tau) * (v_pos * pp), (0.5 * tau) * (v_neg * pm));
}

SpinorField integral3(const SpinorField& phi, double tau, double lambda,
                      const ScalarMultiplier& p2, const ScalarMultiplier& m2) {
  const auto [pp, pm] = plus_minus(phi);
  const ComplexField plus_dir = pp.conj() * apply_scalar_multiplier(p2, pm * pm) +
                                pp * apply_scalar_multiplier(p2, pm.abs2());
  const ComplexField minus_dir = pm * apply_scalar_multiplier(m2, pp.abs2()) +
                                 pm.conj() * apply_scalar_multiplier(m2, pp * pp);
  const double c = 0.25 * tau * lambda;
  return from_eigencomponents(c * plus_dir, c * minus_dir);
}

SpinorField integral2_dp(const SpinorField& phi, double tau, const ScalarMultiplier& p2,
                         const ScalarMultiplier& m2) {
  const auto [pp, pm] = plus_minus(phi);
  const ScalarMultiplier inv_lap = inverse_laplacian(phi.grid());
  const ComplexField pp2 = pp.abs2();
  const ComplexField pm2 = pm.abs2();
  const ComplexField a =
      pp * apply_scalar_multiplier(inv_lap, apply_scalar_multiplier(p2, pm2) + pp2);
  const ComplexField b =
      pm * apply_scalar_multiplier(inv_lap, apply_scalar_multiplier(m2, pp2) + pm2);
  const double c = -0.25 * tau;
  return from_eigencomponents(c * a, c * b);
}

void require_physical(const SpinorField& phi, const char* what) {
  if (!phi.is_physical()) {
    throw std::invalid_argument(std::string(what) + " requires a physical-space spinor");
  }
}

SpinorField theta(const SpinorField& phi, const ModelConfig& cfg, const StepKernels& k) {
  require_physical(phi, "ULI step");
  const double tau = k.tau;
  SpinorField sum = integral1(phi, tau, k.phi1_2tau, k.phi1_m2tau);
  if (cfg.kind() == PotentialKind::external) {
    sum += integral2_ext(phi, tau, *k.v_phi1_tau, *k.v_phi1_mtau);
  } else {
    sum += integral2_dp(phi, tau, k.phi1_2tau, k.phi1_m2tau);
  }
  sum += integral3(phi, tau, cfg.lambda, k.phi1_2tau, k.phi1_m2tau);
  // e^{-tau alpha d_x} = e^{-tau d_x} Pi+ + e^{tau d_x} Pi-.
  return shift_propagator(phi - kI * sum, k.shift_minus, k.shift_plus);
}

SpinorField theta_second_order(const SpinorField& phi, const ModelConfig& cfg,
                               const StepKernels& k) {
  const double tau = k.tau;
  const GField g = g_field(phi, cfg);
  const SpinorField gs = g.as_spinor();
  SpinorField lg = apply_beta(gs);
  if (const auto* ext = std::get_if<ExternalPotential>(&cfg.potential)) {
    lg += ext->v * gs;
  }
  SpinorField out = theta(phi, cfg, k);
  out -= (0.5 * tau * tau) * lg;
  out += (kI * (0.5 * tau * tau)) * gateaux_term(phi, g, cfg);
  return out;
}

void require_kind(const SchemeState& state, PotentialKind kind, const char* what) {
  if (state.cfg->kind() != kind) {
    throw std::invalid_argument(std::string(what) +
                                (kind == PotentialKind::external
                                     ? " requires an external potential"
                                     : " requires the self-consistent Poisson model"));
  }
}

}  // namespace

SpinorField uli1_integral1(const SpinorField& phi, double tau) {
  const auto& grid = phi.grid();
  return integral1(phi, tau, phi1_shift_multiplier(grid, 2.0 * tau),
                   phi1_shift_multiplier(grid, -2.0 * tau));
}

SpinorField uli1_integral3(const SpinorField& phi, double tau, double lambda) {
  const auto& grid = phi.grid();
  return integral3(phi, tau, lambda, phi1_shift_multiplier(grid, 2.0 * tau),
                   phi1_shift_multiplier(grid, -2.0 * tau));
}

UliIntegrals uli1_integrals_ext(const SpinorField& phi, double tau, const ComplexField& v,
                                double lambda) {
  require_physical(phi, "uli1_integrals_ext");
  const auto& grid = phi.grid();
  const ComplexField vp = v.to_physical();
  const auto p1 = phi1_shift_multiplier(grid, tau);
  const auto m1 = phi1_shift_multiplier(grid, -tau);
  return {uli1_integral1(phi, tau),
          integral2_ext(phi, tau, apply_scalar_multiplier(p1, vp),
                        apply_scalar_multiplier(m1, vp)),
          uli1_integral3(phi, tau, lambda)};
}

SpinorField uli1_integral2_dp(const SpinorField& phi, double tau) {
  require_physical(phi, "uli1_integral2_dp");
  const auto& grid = phi.grid();
  return integral2_dp(phi, tau, phi1_shift_multiplier(grid, 2.0 * tau),
                      phi1_shift_multiplier(grid, -2.0 * tau));
}

SpinorField uli1_map(const SpinorField& phi, double tau, const ModelConfig& cfg) {
  if (tau < 0.0) throw std::invalid_argument("uli1_map: tau must be >= 0");
  if (tau == 0.0) return phi;
  return theta(phi, cfg, *make_kernels(tau, cfg));
}

SpinorField uli2_map(const SpinorField& phi, double tau, const ModelConfig& cfg) {
  if (tau < 0.0) throw std::invalid_argument("uli2_map: tau must be >= 0");
  if (tau == 0.0) return phi;
  return theta_second_order(phi, cfg, *make_kernels(tau, cfg));
}

SchemeState step_uli1_ext(const SchemeState& state) {
  require_kind(state, PotentialKind::external, "step_uli1_ext");
  auto k = kernels_for(state);
  SpinorField next = theta(state.current, *state.cfg, *k);
  return detail::advance(state, std::move(next), k);
}

SchemeState step_uli1_dp(const SchemeState& state) {
  require_kind(state, PotentialKind::poisson, "step_uli1_dp");
  auto k = kernels_for(state);
  SpinorField next = theta(state.current, *state.cfg, *k);
  return detail::advance(state, std::move(next), k);
}

SchemeState step_uli2_ext(const SchemeState& state) {
  require_kind(state, PotentialKind::external, "step_uli2_ext");
  auto k = kernels_for(state);
  SpinorField next = theta_second_order(state.current, *state.cfg, *k);
  return detail::advance(state, std::move(next), k);
}

SchemeState step_uli2_dp(const SchemeState& state) {
  require_kind(state, PotentialKind::poisson, "step_uli2_dp");
  auto k = kernels_for(state);
  SpinorField next = theta_second_order(state.current, *state.cfg, *k);
  return detail::advance(state, std::move(next), k);
}

}  // namespace dirac
