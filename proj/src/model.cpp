#include "dirac/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {

void require_physical(const SpinorField& phi, const char* what) {
  if (!phi.is_physical()) {
    throw std::invalid_argument(std::string(what) + " requires a physical-space spinor");
  }
}

// d_xx^{-1} of a real field; the imaginary roundoff is dropped.
ComplexField real_inverse_laplacian(const ComplexField& f) {
  return apply_scalar_multiplier(inverse_laplacian(f.grid()), f).real_part();
}

// Im[a] as a real-valued field.
ComplexField imag_part(const ComplexField& a) {
  ComplexField out = a;
  for (auto& v : out.values()) v = v.imag();
  return out;
}

}  // namespace

ModelConfig make_external_config(const SpectralGrid& grid, double lambda, ComplexField v) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite");
  if (!(v.grid() == grid)) throw std::invalid_argument("external potential grid mismatch");
  ComplexField vp = v.to_physical();
  if (!(vp.max_abs_imag() < 1e-10)) {
    throw std::invalid_argument("external potential must be real-valued");
  }
  return ModelConfig{grid, lambda, ExternalPotential{vp.real_part()}, false};
}

ModelConfig make_poisson_config(const SpectralGrid& grid, double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite");
  return ModelConfig{grid, lambda, PoissonPotential{}, false};
}

ComplexField default_external_potential(const SpectralGrid& grid) {
  return ComplexField::sample(grid, [](double x) { return Complex(2.0 * std::sin(x)); });
}

SpinorField thirring_nonlinearity(const SpinorField& phi, double lambda) {
  require_physical(phi, "thirring_nonlinearity");
  SpinorField out = phi;
  auto a = out.phi1.values();
  auto b = out.phi2.values();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double g = lambda * (std::norm(a[j]) - std::norm(b[j]));
    a[j] *= g;
    b[j] *= -g;
  }
  return out;
}

std::pair<ComplexField, ComplexField> plus_minus(const SpinorField& phi) {
  require_physical(phi, "plus_minus");
  return {phi.phi1 + phi.phi2, phi.phi1 - phi.phi2};
}

SpinorField project(const SpinorField& phi, Projection sign) {
  if (sign == Projection::plus) {
    ComplexField half = 0.5 * (phi.phi1 + phi.phi2);
    return {half, half};
  }
  ComplexField half = 0.5 * (phi.phi1 - phi.phi2);
  return {half, -half};
}

SpinorField shift_propagator(const SpinorField& phi, const ScalarMultiplier& forward,
                             const ScalarMultiplier& backward) {
  // Pi+ Phi = (p/2)(1,1), Pi- Phi = (m/2)(1,-1).
  const ComplexField p = apply_scalar_multiplier(forward, 0.5 * (phi.phi1 + phi.phi2));
  const ComplexField m = apply_scalar_multiplier(backward, 0.5 * (phi.phi1 - phi.phi2));
  return {p + m, p - m};
}

SpinorField shift_propagator(const SpinorField& phi, double s) {
  const auto& grid = phi.grid();
  return shift_propagator(phi, translation_multiplier(grid, s),
                          translation_multiplier(grid, -s));
}

ComplexField density(const SpinorField& phi) {
  require_physical(phi, "density");
  return phi.phi1.abs2() + phi.phi2.abs2();
}

ComplexField density_difference(const SpinorField& phi) {
  require_physical(phi, "density_difference");
  return phi.phi1.abs2() - phi.phi2.abs2();
}

ComplexField potential_field(const SpinorField& phi, const ModelConfig& cfg) {
  require_physical(phi, "potential_field");
  if (const auto* ext = std::get_if<ExternalPotential>(&cfg.potential)) return ext->v;
  return poisson_potential(density(phi));
}

SpinorField potential_and_nonlinear(const SpinorField& phi, const ModelConfig& cfg) {
  const ComplexField v = potential_field(phi, cfg);
  return v * phi + thirring_nonlinearity(phi, cfg.lambda);
}

GField g_field(const SpinorField& phi, const ModelConfig& cfg) {
  return GField::from_spinor(apply_beta(phi) + potential_and_nonlinear(phi, cfg));
}

SpinorField nonlinear_operator(const SpinorField& phi, const ModelConfig& cfg) {
  SpinorField out = thirring_nonlinearity(phi, cfg.lambda);
  if (cfg.kind() == PotentialKind::poisson) {
    out -= real_inverse_laplacian(density(phi)) * phi;
  }
  return out;
}

SpinorField gateaux_term(const SpinorField& phi, const GField& g, const ModelConfig& cfg) {
  require_physical(phi, "gateaux_term");
  const SpinorField gs = g.as_spinor();
  const Complex i(0.0, 1.0);
  const double lambda = cfg.lambda;

  // i lambda (|phi1|^2 - |phi2|^2) beta G
  SpinorField out = (i * lambda) * (density_difference(phi) * apply_beta(gs));
  // 2 lambda Im[phi1 conj(G1) + conj(phi2) G2] beta Phi
  const ComplexField im_plus = imag_part(phi.phi1 * g.g1.conj() + phi.phi2.conj() * g.g2);
  out += (2.0 * lambda) * (im_plus * apply_beta(phi));

  if (cfg.kind() == PotentialKind::poisson) {
    // -(d_xx^{-1}|Phi|^2)(iG)
    out -= i * (real_inverse_laplacian(density(phi)) * gs);
    // -2 (d_xx^{-1} Im[phi1 conj(G1) - conj(phi2) G2]) Phi
    const ComplexField im_minus = imag_part(phi.phi1 * g.g1.conj() - phi.phi2.conj() * g.g2);
    out -= 2.0 * (real_inverse_laplacian(im_minus) * phi);
  }
  return out;
}

SpinorField potential_phase_flow(const SpinorField& phi, double t, const ModelConfig& cfg) {
  require_physical(phi, "potential_phase_flow");
  const ComplexField v = potential_field(phi, cfg);
  SpinorField out = phi;
  auto a = out.phi1.values();
  auto b = out.phi2.values();
  auto vv = v.values();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double g = cfg.lambda * (std::norm(a[j]) - std::norm(b[j]));
    const double vj = vv[j].real();
    a[j] *= std::polar(1.0, -t * (vj + g));
    b[j] *= std::polar(1.0, -t * (vj - g));
  }
  return out;
}

}  // namespace dirac
