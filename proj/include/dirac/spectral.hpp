#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dirac/field.hpp"

namespace dirac {

ComplexField forward_transform(const ComplexField& field);
ComplexField inverse_transform(const ComplexField& field);

/// phi1(z) = (e^z - 1) / z with phi1(0) = 1.
Complex phi1(Complex z);
/// phi2(z) = (e^z - z - 1) / z^2 with phi2(0) = 1/2.
Complex phi2(Complex z);

/// Diagonal Fourier multiplier: coefficient in slot k is multiplied by
/// symbol()[k].
class ScalarMultiplier {
 public:
  ScalarMultiplier(SpectralGrid grid, std::vector<Complex> symbol);

  /// Builds the symbol from a function of the integer wavenumber l.
  static ScalarMultiplier from_wavenumber(const SpectralGrid& grid,
                                          const std::function<Complex(int)>& m);
  static ScalarMultiplier identity(const SpectralGrid& grid);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::span<const Complex> symbol() const noexcept { return symbol_; }

 private:
  SpectralGrid grid_;
  std::vector<Complex> symbol_;
};

/// Dense 2x2 complex matrix, row major.
struct Mat2 {
  Complex a00, a01, a10, a11;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 alpha() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr Mat2 beta() { return {1.0, 0.0, 0.0, -1.0}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a00 + b.a00, a.a01 + b.a01, a.a10 + b.a10, a.a11 + b.a11};
  }
  friend Mat2 operator*(Complex s, const Mat2& a) {
    return {s * a.a00, s * a.a01, s * a.a10, s * a.a11};
  }
};

/// Mode-wise 2x2 matrix acting on spinor coefficients.
class MatrixMultiplier {
 public:
  MatrixMultiplier(SpectralGrid grid, std::vector<Mat2> blocks);

  static MatrixMultiplier from_wavenumber(const SpectralGrid& grid,
                                          const std::function<Mat2(int)>& m);
  static MatrixMultiplier identity(const SpectralGrid& grid);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::span<const Mat2> blocks() const noexcept { return blocks_; }

 private:
  SpectralGrid grid_;
  std::vector<Mat2> blocks_;
};

/// Applies m mode-wise. The result keeps the representation of the input.
ComplexField apply_scalar_multiplier(const ScalarMultiplier& m, const ComplexField& field);
SpinorField apply_matrix_multiplier(const MatrixMultiplier& m, const SpinorField& spinor);

/// e^{s d_x}: m_l = e^{i s l}, i.e. (e^{s d_x} f)(x) = f(x + s).
ScalarMultiplier translation_multiplier(const SpectralGrid& grid, double s);

/// phi1(a d_x): m_l = phi1(i a l).
ScalarMultiplier phi1_shift_multiplier(const SpectralGrid& grid, double a);

/// d_xx^{-1}: m_l = -1/l^2, zero mode annihilated.
ScalarMultiplier inverse_laplacian(const SpectralGrid& grid);

/// Multiplier with symbol -l^2 (d_xx). Used to check Poisson residuals.
ScalarMultiplier laplacian(const SpectralGrid& grid);

enum class MatrixFunction { exp, phi1, phi2 };

/// f(-i tau T_l) with T_l = l alpha + beta, evaluated through the spectral
/// projectors of T_l (eigenvalues +-sqrt(1 + l^2)).
MatrixMultiplier free_dirac_matrix_function(const SpectralGrid& grid, MatrixFunction kind,
                                            double tau);

/// The free Dirac symbol T_l = l alpha + beta.
Mat2 free_dirac_symbol(int l);

/// FD resolvent A_tau = (I + tau alpha d_x)^{-1}; per mode (I - i tau l alpha)/(1 + tau^2 l^2).
MatrixMultiplier fd_resolvent(const SpectralGrid& grid, double tau);

/// sqrt(sum_l (1 + l^2)^r |c_l|^2) over normalized coefficients.
double sobolev_norm(const ComplexField& field, double r);
double sobolev_norm(const SpinorField& spinor, double r);

/// V = -d_xx^{-1} density. Throws std::invalid_argument if the density is
/// not real to 1e-10; returns a real-valued physical field with zero mean.
ComplexField poisson_potential(const ComplexField& density);

/// Zeroes every mode with |l| > N/3 (2/3-rule truncation).
ComplexField two_thirds_truncation(const ComplexField& field);

}  // namespace dirac
