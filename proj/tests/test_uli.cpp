#include <doctest.h>

#include <random>

#include "dirac/classical.hpp"
#include "dirac/harness.hpp"
#include "dirac/rough_data.hpp"
#include "dirac/uli.hpp"
#include "uli_oracle.hpp"

using namespace dirac;
using oracle::UliIntegral;

namespace {

const Complex kI(0.0, 1.0);

double rel(const SpinorField& got, const oracle::Spinor& want) {
  return oracle::rel_diff(oracle::flatten(oracle::from_field(got)), oracle::flatten(want));
}

ModelConfig ext(const SpectralGrid& g, double lambda = 1.0) {
  return make_external_config(g, lambda, default_external_potential(g));
}

ModelConfig free_model(const SpectralGrid& g) {
  return make_external_config(g, 0.0, ComplexField::constant(g, 0.0));
}

}  // namespace

TEST_CASE("closed-form integrals match quadrature of their defining integrals") {
  std::mt19937_64 rng(21);
  for (int n : {16, 32}) {
    SpectralGrid g(n);
    const int band = n / 6;
    for (double tau : {0.05, 0.2}) {
      for (int trial = 0; trial < 2; ++trial) {
        const SpinorField phi = oracle::random_spinor(g, rng, band);
        const ComplexField v = oracle::random_real_field(g, rng, band);
        const double lambda = 0.8;
        const auto o = oracle::from_field(phi);
        const oracle::CVec vv(v.values().begin(), v.values().end());
        const UliIntegrals ints = uli1_integrals_ext(phi, tau, v, lambda);
        CHECK(rel(ints.i1, oracle::quadrature(UliIntegral::i1, o, tau)) < 1e-10);
        CHECK(rel(ints.i2, oracle::quadrature(UliIntegral::i2_external, o, tau, vv)) < 1e-10);
        CHECK(rel(ints.i3, oracle::quadrature(UliIntegral::i3, o, tau, {}, lambda)) < 1e-10);
        CHECK(rel(uli1_integral2_dp(phi, tau), oracle::quadrature(UliIntegral::i2_poisson, o, tau)) <
              1e-10);
      }
    }
  }
}

TEST_CASE("I3 equals the direct convolution formula") {
  std::mt19937_64 rng(22);
  const int n = 16;
  SpectralGrid g(n);
  const SpinorField phi = oracle::random_spinor(g, rng, 2);
  const double tau = 0.13, lambda = 1.4;
  const auto [pp, pm] = plus_minus(phi);
  const auto cp = forward_transform(pp), cm = forward_transform(pm);
  const oracle::CVec p(cp.values().begin(), cp.values().end());
  const oracle::CVec m(cm.values().begin(), cm.values().end());
  const auto pbar = oracle::conj_coeffs(p), mbar = oracle::conj_coeffs(m);
  auto phi1_mult = [&](oracle::CVec c, double a) {
    for (int k = 0; k < n; ++k) c[k] *= phi1(Complex(0.0, a * oracle::wavenumber(n, k)));
    return c;
  };
  using oracle::convolve;
  const auto plus_dir = convolve(pbar, phi1_mult(convolve(m, m), 2 * tau));
  const auto plus_dir2 = convolve(p, phi1_mult(convolve(m, mbar), 2 * tau));
  const auto minus_dir = convolve(m, phi1_mult(convolve(p, pbar), -2 * tau));
  const auto minus_dir2 = convolve(mbar, phi1_mult(convolve(p, p), -2 * tau));
  oracle::CVec a(n), b(n);
  const double c = 0.25 * tau * lambda;
  for (int k = 0; k < n; ++k) {
    const Complex P = plus_dir[k] + plus_dir2[k];
    const Complex M = minus_dir[k] + minus_dir2[k];
    a[k] = c * (P + M);
    b[k] = c * (P - M);
  }
  const auto lib = uli1_integral3(phi, tau, lambda);
  const auto la = forward_transform(lib.phi1), lb = forward_transform(lib.phi2);
  for (int k = 0; k < n; ++k) {
    CHECK(std::abs(la[k] - a[k]) < 1e-12);
    CHECK(std::abs(lb[k] - b[k]) < 1e-12);
  }
}

TEST_CASE("degenerate integrals") {
  SpectralGrid g(32);
  const auto c1 = ComplexField::constant(g, Complex(0.3, 0.1));
  const auto c2 = ComplexField::constant(g, Complex(-0.2, 0.5));
  const SpinorField cst{c1, c2};
  const double tau = 0.37;
  CHECK(oracle::max_diff(uli1_integral1(cst, tau), tau * apply_beta(cst)) < 1e-14);
  CHECK(oracle::max_abs(uli1_integral2_dp(cst, tau)) < 1e-15);
  CHECK(oracle::max_abs(uli1_integral2_dp(SpinorField::zero(g), tau)) == 0.0);

  std::mt19937_64 rng(23);
  const SpinorField phi = oracle::random_spinor(g, rng);
  CHECK(oracle::max_abs(uli1_integral3(phi, tau, 0.0)) == 0.0);
}

TEST_CASE("zero step is the identity") {
  std::mt19937_64 rng(24);
  SpectralGrid g(32);
  const SpinorField phi = oracle::random_spinor(g, rng);
  for (const auto& cfg : {ext(g), make_poisson_config(g, 1.0)}) {
    CHECK(oracle::max_diff(uli1_map(phi, 0.0, cfg), phi) == 0.0);
    CHECK(oracle::max_diff(uli2_map(phi, 0.0, cfg), phi) == 0.0);
    CHECK_THROWS_AS(uli1_map(phi, -0.1, cfg), std::invalid_argument);
  }
}

TEST_CASE("second-order maps equal their expanded formulas") {
  std::mt19937_64 rng(25);
  SpectralGrid g(32);
  const SpinorField phi = oracle::random_spinor(g, rng);
  const double tau = 0.08, lambda = 0.9;
  const double t2 = tau * tau;

  {
    const auto cfg = ext(g, lambda);
    const auto v = default_external_potential(g);
    const auto gs = g_field(phi, cfg).as_spinor();
    const auto dd = density_difference(phi);
    ComplexField im = phi.phi1 * gs.phi1.conj() + phi.phi2.conj() * gs.phi2;
    for (auto& z : im.values()) z = z.imag();
    const auto expected = uli1_map(phi, tau, cfg) - (0.5 * t2) * (apply_beta(gs) + v * gs) -
                          (0.5 * lambda * t2) * (dd * apply_beta(gs)) +
                          (kI * lambda * t2) * (im * apply_beta(phi));
    CHECK(oracle::max_diff(uli2_map(phi, tau, cfg), expected) < 1e-13);
  }
  {
    const auto cfg = make_poisson_config(g, lambda);
    const auto gs = g_field(phi, cfg).as_spinor();
    const auto dd = density_difference(phi);
    ComplexField im_plus = phi.phi1 * gs.phi1.conj() + phi.phi2.conj() * gs.phi2;
    ComplexField im_minus = phi.phi1 * gs.phi1.conj() - phi.phi2.conj() * gs.phi2;
    for (auto& z : im_plus.values()) z = z.imag();
    for (auto& z : im_minus.values()) z = z.imag();
    const auto inv = inverse_laplacian(g);
    const auto w = apply_scalar_multiplier(inv, density(phi));
    const auto wi = apply_scalar_multiplier(inv, im_minus);
    const auto expected = uli1_map(phi, tau, cfg) - (0.5 * t2) * apply_beta(gs) -
                          (0.5 * lambda * t2) * (dd * apply_beta(gs)) +
                          (kI * lambda * t2) * (im_plus * apply_beta(phi)) + (0.5 * t2) * (w * gs) -
                          (kI * t2) * (wi * phi);
    CHECK(oracle::max_diff(uli2_map(phi, tau, cfg), expected) < 1e-13);
  }
}

TEST_CASE("local orders for the free equation") {
  SpectralGrid g(64);
  const SpinorField phi = smooth_profile(g);
  const auto cfg = free_model(g);
  std::vector<std::pair<double, double>> p1, p2;
  for (double tau : {0.1, 0.05, 0.025, 0.0125}) {
    const auto exact = apply_matrix_multiplier(free_dirac_propagator(g, tau), phi);
    p1.emplace_back(tau, relative_error(exact, uli1_map(phi, tau, cfg), 1.0));
    p2.emplace_back(tau, relative_error(exact, uli2_map(phi, tau, cfg), 1.0));
  }
  CHECK(fit_order(p1).slope == doctest::Approx(2.0).epsilon(0.1));
  CHECK(fit_order(p2).slope == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("Poisson variant with translation-invariant density reduces to the potential-free case") {
  // A single-mode spinor in the range of the plus projector keeps a constant
  // density under every shift, so the Poisson potential vanishes throughout.
  SpectralGrid g(32);
  const auto e = ComplexField::sample(g, [](double x) { return std::polar(0.7, 3 * x); });
  const SpinorField phi{e, e};
  const auto dp = make_poisson_config(g, 1.2);
  const auto flat = make_external_config(g, 1.2, ComplexField::constant(g, 0.0));
  CHECK(oracle::max_diff(uli1_map(phi, 0.1, dp), uli1_map(phi, 0.1, flat)) < 1e-13);
}

TEST_CASE("ULI steppers check the potential kind") {
  SpectralGrid g(16);
  const auto phi = SpinorField::zero(g);
  const auto e = std::make_shared<const ModelConfig>(ext(g));
  const auto p = std::make_shared<const ModelConfig>(make_poisson_config(g, 1.0));
  CHECK_THROWS_AS(step_uli1_dp(make_state(phi, 0.1, e)), std::invalid_argument);
  CHECK_THROWS_AS(step_uli2_dp(make_state(phi, 0.1, e)), std::invalid_argument);
  CHECK_THROWS_AS(step_uli1_ext(make_state(phi, 0.1, p)), std::invalid_argument);
  CHECK_THROWS_AS(step_uli2_ext(make_state(phi, 0.1, p)), std::invalid_argument);
  CHECK(oracle::max_abs(step_uli2_dp(make_state(phi, 0.1, p)).current) == 0.0);
}

TEST_CASE("steppers agree with the maps") {
  std::mt19937_64 rng(26);
  SpectralGrid g(32);
  const SpinorField phi = oracle::random_spinor(g, rng);
  for (const auto& cfg : {std::make_shared<const ModelConfig>(ext(g)),
                          std::make_shared<const ModelConfig>(make_poisson_config(g, 1.0))}) {
    const auto s = make_state(phi, 0.03, cfg);
    CHECK(oracle::max_diff(step(SchemeId::ULI1, s).current, uli1_map(phi, 0.03, *cfg)) == 0.0);
    CHECK(oracle::max_diff(step(SchemeId::ULI2, s).current, uli2_map(phi, 0.03, *cfg)) == 0.0);
  }
}
