#include <doctest.h>

#include <numbers>
#include <random>

#include "dirac/spectral.hpp"
#include "oracles.hpp"

using namespace dirac;
using oracle::CVec;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

CVec values(const ComplexField& f) { return {f.values().begin(), f.values().end()}; }

double rel_error(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace


// Multiplier accessors return views; keep a copy when the multiplier is a temporary.
template <class T>
std::vector<T> owned(std::span<const T> s) {
  return {s.begin(), s.end()};
}

TEST_CASE("grid layout and validation") {
  SpectralGrid g(8);
  CHECK(g.n_modes() == 8);
  CHECK(g.point(2) == doctest::Approx(kPi / 2));
  const int expected[8] = {0, 1, 2, 3, -4, -3, -2, -1};
  for (int k = 0; k < 8; ++k) CHECK(g.wavenumber(k) == expected[k]);
  CHECK_THROWS_AS(SpectralGrid(7), std::invalid_argument);
  CHECK_THROWS_AS(SpectralGrid(2), std::invalid_argument);
  CHECK_THROWS_AS(SpectralGrid(0), std::invalid_argument);
}

TEST_CASE("forward transform of simple fields") {
  SpectralGrid g(8);
  const auto one = forward_transform(ComplexField::constant(g, 1.0));
  CHECK(std::abs(one[0] - 1.0) < 1e-15);
  for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(one[k]) < 1e-15);

  const auto mode = forward_transform(ComplexField::sample(g, [](double x) { return std::polar(1.0, x); }));
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(mode[k] - (k == 1 ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("transform matches brute-force DFT and round trips") {
  std::mt19937_64 rng(7);
  for (int n : {8, 16, 64, 4096}) {
    SpectralGrid g(n);
    const ComplexField f = oracle::random_field(g, rng);
    const ComplexField c = forward_transform(f);
    CHECK(c.representation() == Representation::spectral);
    if (n <= 64) CHECK(oracle::rel_diff(values(c), oracle::dft(values(f))) < 1e-12);
    CHECK(oracle::rel_diff(values(inverse_transform(c)), values(f)) < 1e-12);
  }
}

TEST_CASE("phi functions") {
  CHECK(phi1(0.0) == Complex(1.0));
  CHECK(phi2(0.0) == Complex(0.5));
  CHECK(rel_error(phi1(Complex(0.0, kPi)), Complex(0.0, 2.0 / kPi)) < 1e-15);

  // Small arguments against long-double series.
  for (double r : {1e-12, 1e-8, 1e-5, 9e-5, 2e-4, 1e-2, 0.5, 0.99, 1.01}) {
    for (double ang : {0.0, 0.7, kPi / 2, 2.5, kPi}) {
      const std::complex<long double> z = std::polar<long double>(r, ang);
      std::complex<long double> s1 = 0, s2 = 0, term = 1;
      for (int k = 0; k < 40; ++k) {
        s1 += term / static_cast<long double>(k + 1);
        s2 += term / static_cast<long double>((k + 1) * (k + 2));
        term *= z / static_cast<long double>(k + 1);
      }
      const Complex zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      const Complex e1(static_cast<double>(s1.real()), static_cast<double>(s1.imag()));
      const Complex e2(static_cast<double>(s2.real()), static_cast<double>(s2.imag()));
      CHECK(rel_error(phi1(zd), e1) < 1e-14);
      CHECK(rel_error(phi2(zd), e2) < 1e-14);
    }
  }

  // Defining identities for random |z| <= 100.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 10000) {
    const Complex z(100 * u(rng), 100 * u(rng));
    if (std::abs(z) > 100.0 || std::abs(z) < 1e-3 || z.real() > 20.0) continue;
    ++checked;
    const Complex em1 = std::exp(z) - 1.0;
    const Complex em = em1 - z;
    CHECK(rel_error(z * phi1(z), em1) < 1e-12);
    CHECK(rel_error(z * z * phi2(z), em) < 1e-12);
  }

  // Purely imaginary arguments up to 1e3 (the only ones the schemes use).
  for (double y : {1.0, 10.0, 123.4, 999.0}) {
    const Complex z(0.0, y);
    CHECK(rel_error(phi1(z), (std::exp(z) - 1.0) / z) < 1e-14);
    CHECK(rel_error(phi2(z), (std::exp(z) - z - 1.0) / (z * z)) < 1e-13);
  }
}

TEST_CASE("scalar multipliers") {
  std::mt19937_64 rng(11);
  SpectralGrid g(16);
  const ComplexField f = oracle::random_field(g, rng);

  CHECK(oracle::max_diff(apply_scalar_multiplier(ScalarMultiplier::identity(g), f), f) < 1e-14);
  CHECK(oracle::max_diff(apply_scalar_multiplier(translation_multiplier(g, 0.0), f), f) < 1e-14);
  CHECK(oracle::max_diff(apply_scalar_multiplier(translation_multiplier(g, 2 * kPi), f), f) < 1e-12);

  const auto e = ComplexField::sample(g, [](double x) { return std::polar(1.0, x); });
  const auto shifted = apply_scalar_multiplier(translation_multiplier(g, 0.3), e);
  for (std::size_t j = 0; j < 16; ++j) CHECK(std::abs(shifted[j] - std::polar(1.0, 0.3) * e[j]) < 1e-14);

  const auto c = ComplexField::sample(g, [](double x) { return std::cos(x); });
  const auto cs = apply_scalar_multiplier(translation_multiplier(g, kPi / 2), c);
  for (int j = 0; j < 16; ++j) CHECK(std::abs(cs[j] - std::cos(g.point(j) + kPi / 2)) < 1e-14);

  // Representation is preserved.
  const auto spec = apply_scalar_multiplier(translation_multiplier(g, 0.1), f.to_spectral());
  CHECK(spec.representation() == Representation::spectral);

  // Semigroup.
  const auto st = apply_scalar_multiplier(translation_multiplier(g, 0.4),
                                          apply_scalar_multiplier(translation_multiplier(g, -1.1), f));
  CHECK(oracle::max_diff(st, apply_scalar_multiplier(translation_multiplier(g, -0.7), f)) < 1e-12);
}

TEST_CASE("phi1 shift multiplier against quadrature") {
  SpectralGrid g(16);
  const auto a0 = owned(phi1_shift_multiplier(g, 0.0).symbol());
  for (auto m : a0) CHECK(m == Complex(1.0));
  for (double a : {0.3, -2.0}) CHECK(phi1_shift_multiplier(g, a).symbol()[0] == Complex(1.0));

  // m_l = int_0^1 e^{i a l s} ds, by Gauss-Kronrod.
  const double tau = 0.17;
  const auto sym = owned(phi1_shift_multiplier(g, 2 * tau).symbol());
  oracle::VectorQuadrature q;
  const CVec exact = q.integrate(
      [&](double s) {
        CVec v(16);
        for (int k = 0; k < 16; ++k) v[k] = std::polar(1.0, 2 * tau * g.wavenumber(k) * s);
        return v;
      },
      0.0, 1.0, 1e-14);
  for (int k = 0; k < 16; ++k) CHECK(std::abs(sym[k] - exact[k]) < 1e-12);
  const Complex l3 = (std::exp(Complex(0.0, 6 * tau)) - 1.0) / Complex(0.0, 6 * tau);
  CHECK(std::abs(sym[3] - l3) < 1e-15);

  // Applied to a random field equals the mode-wise quadrature.
  std::mt19937_64 rng(5);
  const ComplexField f = oracle::random_field(g, rng);
  const auto applied = forward_transform(apply_scalar_multiplier(phi1_shift_multiplier(g, 2 * tau), f));
  const auto fc = forward_transform(f);
  for (int k = 0; k < 16; ++k) CHECK(std::abs(applied[k] - exact[k] * fc[k]) < 1e-10);
}

TEST_CASE("free Dirac matrix functions") {
  SpectralGrid g(16);
  const double tau = 0.3;
  const auto e = owned(free_dirac_matrix_function(g, MatrixFunction::exp, tau).blocks());
  CHECK(std::abs(e[0].a00 - std::polar(1.0, -tau)) < 1e-15);
  CHECK(std::abs(e[0].a11 - std::polar(1.0, tau)) < 1e-15);
  CHECK(std::abs(e[0].a01) < 1e-15);

  const auto id = owned(free_dirac_matrix_function(g, MatrixFunction::exp, 0.0).blocks());
  for (const auto& m : id) {
    CHECK(std::abs(m.a00 - 1.0) < 1e-15);
    CHECK(std::abs(m.a11 - 1.0) < 1e-15);
    CHECK(std::abs(m.a01) < 1e-15);
    CHECK(std::abs(m.a10) < 1e-15);
  }
  const auto p1z = owned(free_dirac_matrix_function(g, MatrixFunction::phi1, 0.0).blocks());
  const auto p2z = owned(free_dirac_matrix_function(g, MatrixFunction::phi2, 0.0).blocks());
  CHECK(std::abs(p1z[5].a00 - 1.0) < 1e-15);
  CHECK(std::abs(p2z[5].a11 - 0.5) < 1e-15);

  // Dense matrix-function oracle for every mode and kind.
  for (double t : {0.3, 0.05, 1.7}) {
    const auto ex = owned(free_dirac_matrix_function(g, MatrixFunction::exp, t).blocks());
    const auto p1 = owned(free_dirac_matrix_function(g, MatrixFunction::phi1, t).blocks());
    const auto p2 = owned(free_dirac_matrix_function(g, MatrixFunction::phi2, t).blocks());
    for (int k = 0; k < 16; ++k) {
      const auto gen = oracle::dirac_generator(g.wavenumber(k), t);
      const auto de = oracle::expm(gen);
      const auto d1 = oracle::phi_matrix(gen, 1);
      const auto d2 = oracle::phi_matrix(gen, 2);
      auto close = [](const Mat2& m, const oracle::Dense& d) {
        return std::max({std::abs(m.a00 - d(0, 0)), std::abs(m.a01 - d(0, 1)),
                         std::abs(m.a10 - d(1, 0)), std::abs(m.a11 - d(1, 1))});
      };
      CHECK(close(ex[k], de) < 1e-12);
      CHECK(close(p1[k], d1) < 1e-12);
      CHECK(close(p2[k], d2) < 1e-12);
    }
  }
  CHECK_THROWS_AS(free_dirac_matrix_function(g, MatrixFunction::exp, -0.1), std::invalid_argument);
}

TEST_CASE("free Dirac exponential: isometry and semigroup") {
  std::mt19937_64 rng(9);
  SpectralGrid g(64);
  const SpinorField psi = oracle::random_spinor(g, rng);
  const auto a = free_dirac_matrix_function(g, MatrixFunction::exp, 0.37);
  const auto b = free_dirac_matrix_function(g, MatrixFunction::exp, 0.81);
  const auto ab = free_dirac_matrix_function(g, MatrixFunction::exp, 1.18);
  const SpinorField out = apply_matrix_multiplier(a, psi);
  for (double r : {0.0, 0.7, 1.0, 2.0}) {
    const double n0 = sobolev_norm(psi, r);
    CHECK(std::abs(sobolev_norm(out, r) - n0) / n0 < 1e-12);
  }
  CHECK(oracle::max_diff(apply_matrix_multiplier(b, out), apply_matrix_multiplier(ab, psi)) < 1e-12);
  CHECK(oracle::max_diff(apply_matrix_multiplier(MatrixMultiplier::identity(g), psi), psi) < 1e-14);
}

TEST_CASE("FD resolvent") {
  SpectralGrid g(64);
  const double tau = 0.1;
  const auto blocks = owned(fd_resolvent(g, tau).blocks());
  CHECK(std::abs(blocks[0].a00 - 1.0) < 1e-15);
  CHECK(std::abs(blocks[0].a01) < 1e-15);
  for (int k = 0; k < 64; ++k) {
    const double l = g.wavenumber(k);
    const Mat2 lhs{1.0, kI * tau * l, kI * tau * l, 1.0};
    const Mat2 p = lhs * blocks[k];
    CHECK(std::abs(p.a00 - 1.0) < 1e-14);
    CHECK(std::abs(p.a11 - 1.0) < 1e-14);
    CHECK(std::abs(p.a01) < 1e-14);
    CHECK(std::abs(p.a10) < 1e-14);
  }
  std::mt19937_64 rng(1);
  const SpinorField psi = oracle::random_spinor(g, rng);
  const SpinorField out = apply_matrix_multiplier(fd_resolvent(g, tau), psi);
  for (double r : {0.0, 0.7, 1.0, 2.0, 3.5}) CHECK(sobolev_norm(out, r) <= sobolev_norm(psi, r));
  CHECK_THROWS_AS(fd_resolvent(g, 0.0), std::invalid_argument);
}

TEST_CASE("inverse Laplacian") {
  SpectralGrid g(32);
  const auto inv = inverse_laplacian(g);
  CHECK(oracle::max_abs(values(apply_scalar_multiplier(inv, ComplexField::constant(g, 3.0)))) < 1e-15);
  const auto c = ComplexField::sample(g, [](double x) { return std::cos(x); });
  const auto ic = apply_scalar_multiplier(inv, c);
  for (int j = 0; j < 32; ++j) CHECK(std::abs(ic[j] + std::cos(g.point(j))) < 1e-14);

  std::mt19937_64 rng(4);
  ComplexField f = oracle::random_field(g, rng).to_spectral();
  f[0] = 0.0;
  const auto back = apply_scalar_multiplier(laplacian(g), apply_scalar_multiplier(inv, f));
  CHECK(oracle::rel_diff(values(back), values(f)) < 1e-10);
}

TEST_CASE("Sobolev norms") {
  SpectralGrid g(16);
  const auto e = ComplexField::sample(g, [](double x) { return std::polar(1.0, x); });
  CHECK(sobolev_norm(e, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  const Complex c(0.3, -0.4);
  for (double r : {0.0, 0.5, 3.0}) {
    CHECK(sobolev_norm(ComplexField::constant(g, c), r) == doctest::Approx(0.5).epsilon(1e-14));
  }
  std::mt19937_64 rng(2);
  const ComplexField f = oracle::random_field(g, rng);
  double sum = 0.0;
  for (auto z : f.values()) sum += std::norm(z);
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(std::sqrt(sum / 16)).epsilon(1e-13));
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(sobolev_norm(f.to_spectral(), 0.0)).epsilon(1e-14));
  const SpinorField s{f, 2.0 * f};
  CHECK(sobolev_norm(s, 1.0) == doctest::Approx(std::sqrt(5.0) * sobolev_norm(f, 1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(sobolev_norm(f, -1.0), std::invalid_argument);
}

TEST_CASE("Poisson potential") {
  SpectralGrid g(32);
  const auto rho = ComplexField::sample(g, [](double x) { return 2 * std::cos(x); });
  const auto v = poisson_potential(rho);
  for (int j = 0; j < 32; ++j) CHECK(std::abs(v[j] - 2 * std::cos(g.point(j))) < 1e-14);
  CHECK(oracle::max_abs(values(poisson_potential(ComplexField::constant(g, 1.0)))) < 1e-15);

  std::mt19937_64 rng(8);
  const SpinorField phi = oracle::random_spinor(g, rng);
  const ComplexField dens = phi.phi1.abs2() + phi.phi2.abs2();
  const ComplexField vp = poisson_potential(dens);
  CHECK(vp.max_abs_imag() == 0.0);
  CHECK(std::abs(forward_transform(vp)[0]) < 1e-15);
  const ComplexField residual = -apply_scalar_multiplier(laplacian(g), vp);
  Complex mean = 0.0;
  for (auto z : dens.values()) mean += z;
  mean /= 32.0;
  CHECK(sobolev_norm(residual - (dens - ComplexField::constant(g, mean)), 0.0) < 1e-10);

  ComplexField bad = dens;
  bad[3] += Complex(0.0, 1e-6);
  CHECK_THROWS_AS(poisson_potential(bad), std::invalid_argument);
}

TEST_CASE("field arithmetic guards") {
  SpectralGrid g8(8), g16(16);
  const auto a = ComplexField::constant(g8, 1.0);
  const auto b = ComplexField::constant(g16, 1.0);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * a.to_spectral(), std::invalid_argument);
  CHECK_THROWS_AS(a + a.to_spectral(), std::invalid_argument);
  CHECK_THROWS_AS(apply_scalar_multiplier(translation_multiplier(g16, 0.1), a), std::invalid_argument);
}

TEST_CASE("two-thirds truncation") {
  std::mt19937_64 rng(6);
  SpectralGrid g(24);
  const auto f = two_thirds_truncation(oracle::random_field(g, rng));
  const auto c = forward_transform(f);
  for (int k = 0; k < 24; ++k) {
    if (std::abs(g.wavenumber(k)) > 8) CHECK(std::abs(c[k]) < 1e-15);
  }
}
