#include "dirac/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac {

namespace {

// e^z - 1 without cancellation for small |z|.
Complex expm1_complex(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

void require_same_grid(const SpectralGrid& a, const SpectralGrid& b) {
  if (!(a == b)) throw std::invalid_argument("multiplier and field live on different grids");
}

}  // namespace

ComplexField forward_transform(const ComplexField& field) {
  if (!field.is_physical()) {
    throw std::invalid_argument("forward_transform expects a physical-space field");
  }
  return field.to_spectral();
}

ComplexField inverse_transform(const ComplexField& field) {
  if (field.is_physical()) {
    throw std::invalid_argument("inverse_transform expects a spectral-space field");
  }
  return field.to_physical();
}

Complex phi1(Complex z) {
  if (std::abs(z) < 1e-4) {
    return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
  }
  return expm1_complex(z) / z;
}

Complex phi2(Complex z) {
  if (std::abs(z) < 1.0) {
    // sum_{k>=0} z^k / (k+2)!, truncated where 1/(k+2)! < 1e-18.
    constexpr int kTerms = 19;
    Complex acc = 0.0;
    for (int k = kTerms - 1; k >= 0; --k) {
      double fact = 1.0;
      for (int m = 2; m <= k + 2; ++m) fact *= m;
      acc = acc * z + 1.0 / fact;
    }
    return acc;
  }
  return (expm1_complex(z) - z) / (z * z);
}

// ---------------------------------------------------------------------------

ScalarMultiplier::ScalarMultiplier(SpectralGrid grid, std::vector<Complex> symbol)
    : grid_(std::move(grid)), symbol_(std::move(symbol)) {
  if (symbol_.size() != grid_.size()) {
    throw std::invalid_argument("ScalarMultiplier: symbol size does not match grid");
  }
}

ScalarMultiplier ScalarMultiplier::from_wavenumber(const SpectralGrid& grid,
                                                   const std::function<Complex(int)>& m) {
  std::vector<Complex> symbol(grid.size());
  for (std::size_t k = 0; k < symbol.size(); ++k) symbol[k] = m(grid.wavenumber(k));
  return ScalarMultiplier(grid, std::move(symbol));
}

ScalarMultiplier ScalarMultiplier::identity(const SpectralGrid& grid) {
  return ScalarMultiplier(grid, std::vector<Complex>(grid.size(), 1.0));
}

MatrixMultiplier::MatrixMultiplier(SpectralGrid grid, std::vector<Mat2> blocks)
    : grid_(std::move(grid)), blocks_(std::move(blocks)) {
  if (blocks_.size() != grid_.size()) {
    throw std::invalid_argument("MatrixMultiplier: block count does not match grid");
  }
}

MatrixMultiplier MatrixMultiplier::from_wavenumber(const SpectralGrid& grid,
                                                   const std::function<Mat2(int)>& m) {
  std::vector<Mat2> blocks(grid.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] = m(grid.wavenumber(k));
  return MatrixMultiplier(grid, std::move(blocks));
}

MatrixMultiplier MatrixMultiplier::identity(const SpectralGrid& grid) {
  return MatrixMultiplier(grid, std::vector<Mat2>(grid.size(), Mat2::identity()));
}

ComplexField apply_scalar_multiplier(const ScalarMultiplier& m, const ComplexField& field) {
  require_same_grid(m.grid(), field.grid());
  ComplexField coeffs = field.to_spectral();
  auto c = coeffs.values();
  auto s = m.symbol();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= s[k];
  return field.is_physical() ? coeffs.to_physical() : coeffs;
}

SpinorField apply_matrix_multiplier(const MatrixMultiplier& m, const SpinorField& spinor) {
  require_same_grid(m.grid(), spinor.grid());
  const bool physical = spinor.phi1.is_physical();
  if (spinor.phi2.is_physical() != physical) {
    throw std::invalid_argument("spinor components carry different representations");
  }
  ComplexField a = spinor.phi1.to_spectral();
  ComplexField b = spinor.phi2.to_spectral();
  auto av = a.values();
  auto bv = b.values();
  auto blocks = m.blocks();
  for (std::size_t k = 0; k < av.size(); ++k) {
    const Mat2& M = blocks[k];
    const Complex u = av[k];
    const Complex v = bv[k];
    av[k] = M.a00 * u + M.a01 * v;
    bv[k] = M.a10 * u + M.a11 * v;
  }
  if (physical) return {a.to_physical(), b.to_physical()};
  return {std::move(a), std::move(b)};
}

ScalarMultiplier translation_multiplier(const SpectralGrid& grid, double s) {
  return ScalarMultiplier::from_wavenumber(
      grid, [s](int l) { return std::polar(1.0, s * static_cast<double>(l)); });
}

ScalarMultiplier phi1_shift_multiplier(const SpectralGrid& grid, double a) {
  return ScalarMultiplier::from_wavenumber(grid, [a](int l) {
    if (l == 0) return Complex(1.0);
    return phi1(Complex(0.0, a * static_cast<double>(l)));
  });
}

ScalarMultiplier inverse_laplacian(const SpectralGrid& grid) {
  return ScalarMultiplier::from_wavenumber(grid, [](int l) {
    if (l == 0) return Complex(0.0);
    const double ll = static_cast<double>(l);
    return Complex(-1.0 / (ll * ll));
  });
}

ScalarMultiplier laplacian(const SpectralGrid& grid) {
  return ScalarMultiplier::from_wavenumber(grid, [](int l) {
    const double ll = static_cast<double>(l);
    return Complex(-ll * ll);
  });
}

Mat2 free_dirac_symbol(int l) {
  const double ll = static_cast<double>(l);
  return {1.0, ll, ll, -1.0};
}

MatrixMultiplier free_dirac_matrix_function(const SpectralGrid& grid, MatrixFunction kind,
                                            double tau) {
  if (tau < 0.0) throw std::invalid_argument("free_dirac_matrix_function: tau must be >= 0");
  return MatrixMultiplier::from_wavenumber(grid, [kind, tau](int l) {
    const double ll = static_cast<double>(l);
    const double mu = std::sqrt(1.0 + ll * ll);
    const Mat2 T = free_dirac_symbol(l);
    // f(-i tau T) = f(-i tau mu) Pi+ + f(i tau mu) Pi-, Pi+- = (I +- T/mu)/2
    //             = (f+ + f-)/2 I + (f+ - f-)/(2 mu) T.
    Complex even;
    Complex odd;
    if (kind == MatrixFunction::exp) {
      even = std::cos(tau * mu);
      odd = Complex(0.0, -std::sin(tau * mu) / mu);
    } else {
      const Complex zp(0.0, -tau * mu);
      const Complex zm(0.0, tau * mu);
      const Complex fp = kind == MatrixFunction::phi1 ? phi1(zp) : phi2(zp);
      const Complex fm = kind == MatrixFunction::phi1 ? phi1(zm) : phi2(zm);
      even = 0.5 * (fp + fm);
      odd = (fp - fm) / (2.0 * mu);
    }
    return even * Mat2::identity() + odd * T;
  });
}

MatrixMultiplier fd_resolvent(const SpectralGrid& grid, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("fd_resolvent: tau must be > 0");
  return MatrixMultiplier::from_wavenumber(grid, [tau](int l) {
    const double tl = tau * static_cast<double>(l);
    const double d = 1.0 / (1.0 + tl * tl);
    const Complex off(0.0, -tl * d);
    return Mat2{d, off, off, d};
  });
}

double sobolev_norm(const ComplexField& field, double r) {
  if (r < 0.0) throw std::invalid_argument("sobolev_norm: r must be >= 0");
  const ComplexField c = field.to_spectral();
  const auto& grid = c.grid();
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double l = grid.wavenumber(k);
    const double w = r == 0.0 ? 1.0 : std::pow(1.0 + l * l, r);
    sum += w * std::norm(c[k]);
  }
  return std::sqrt(sum);
}

double sobolev_norm(const SpinorField& spinor, double r) {
  const double a = sobolev_norm(spinor.phi1, r);
  const double b = sobolev_norm(spinor.phi2, r);
  return std::sqrt(a * a + b * b);
}

ComplexField poisson_potential(const ComplexField& density) {
  const ComplexField rho = density.to_physical();
  const double imag = rho.max_abs_imag();
  if (!(imag < 1e-10)) {
    throw std::invalid_argument("poisson_potential: density is not real-valued");
  }
  ComplexField c = rho.real_part().to_spectral();
  const auto& grid = c.grid();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double l = grid.wavenumber(k);
    c[k] = l == 0 ? Complex(0.0) : c[k] / (l * l);
  }
  return c.to_physical().real_part();
}

ComplexField two_thirds_truncation(const ComplexField& field) {
  ComplexField c = field.to_spectral();
  const auto& grid = c.grid();
  const int cutoff = grid.n_modes() / 3;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (std::abs(grid.wavenumber(k)) > cutoff) c[k] = 0.0;
  }
  return field.is_physical() ? c.to_physical() : c;
}

}  // namespace dirac
