#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dirac {

using Complex = std::complex<double>;

/// Equispaced discretization of the torus [0, 2pi) with N points and the
/// matching N Fourier modes.
///
/// Modes are stored in FFT order: slot k holds wavenumber k for
/// k < N/2 and k - N for k >= N/2. Spectral coefficients use the
/// normalized convention c_l = (1/N) sum_j f(x_j) exp(-i l x_j), so the
/// inverse transform is an unnormalized sum over modes.
class SpectralGrid {
 public:
  /// Throws std::invalid_argument unless N is even and N >= 4.
  explicit SpectralGrid(int n_modes);

  int n_modes() const noexcept { return n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_); }

  double point(int j) const noexcept;
  int wavenumber(std::size_t slot) const noexcept {
    const int k = static_cast<int>(slot);
    return k < n_ / 2 ? k : k - n_;
  }

  /// Physical samples -> normalized coefficients. Spans must have size N.
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  /// Normalized coefficients -> physical samples.
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

  friend bool operator==(const SpectralGrid& a, const SpectralGrid& b) noexcept {
    return a.n_ == b.n_;
  }

 private:
  struct Plans;
  int n_;
  std::shared_ptr<const Plans> plans_;
};

enum class Representation { physical, spectral };

/// A periodic complex function held either as grid samples or as
/// normalized Fourier coefficients.
class ComplexField {
 public:
  ComplexField(SpectralGrid grid, Representation rep);
  ComplexField(SpectralGrid grid, std::vector<Complex> values, Representation rep);

  static ComplexField constant(const SpectralGrid& grid, Complex c);
  static ComplexField sample(const SpectralGrid& grid,
                             const std::function<Complex(double)>& f);

  const SpectralGrid& grid() const noexcept { return grid_; }
  Representation representation() const noexcept { return rep_; }
  bool is_physical() const noexcept { return rep_ == Representation::physical; }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  Complex operator[](std::size_t i) const noexcept { return values_[i]; }
  Complex& operator[](std::size_t i) noexcept { return values_[i]; }

  ComplexField to_spectral() const;
  ComplexField to_physical() const;

  ComplexField conj() const;
  /// Pointwise |f|^2 (physical only).
  ComplexField abs2() const;
  /// Largest |Im f_j|; the field must be physical.
  double max_abs_imag() const;
  /// Drops the imaginary part (physical only).
  ComplexField real_part() const;
  bool all_finite() const noexcept;

  ComplexField& operator+=(const ComplexField& other);
  ComplexField& operator-=(const ComplexField& other);
  ComplexField& operator*=(Complex s) noexcept;

 private:
  SpectralGrid grid_;
  std::vector<Complex> values_;
  Representation rep_;
};

ComplexField operator+(ComplexField a, const ComplexField& b);
ComplexField operator-(ComplexField a, const ComplexField& b);
ComplexField operator-(ComplexField a);
ComplexField operator*(ComplexField a, Complex s);
ComplexField operator*(Complex s, ComplexField a);
/// Pseudospectral product: both operands must be physical.
ComplexField operator*(const ComplexField& a, const ComplexField& b);

/// Two-component spinor (phi1, phi2)^T on a shared grid.
struct SpinorField {
  ComplexField phi1;
  ComplexField phi2;

  static SpinorField zero(const SpectralGrid& grid,
                          Representation rep = Representation::physical);

  const SpectralGrid& grid() const noexcept { return phi1.grid(); }
  bool is_physical() const noexcept { return phi1.is_physical() && phi2.is_physical(); }
  SpinorField to_spectral() const { return {phi1.to_spectral(), phi2.to_spectral()}; }
  SpinorField to_physical() const { return {phi1.to_physical(), phi2.to_physical()}; }
  bool all_finite() const noexcept { return phi1.all_finite() && phi2.all_finite(); }

  SpinorField& operator+=(const SpinorField& o);
  SpinorField& operator-=(const SpinorField& o);
  SpinorField& operator*=(Complex s) noexcept;
};

SpinorField operator+(SpinorField a, const SpinorField& b);
SpinorField operator-(SpinorField a, const SpinorField& b);
SpinorField operator*(SpinorField a, Complex s);
SpinorField operator*(Complex s, SpinorField a);
/// Scalar field times spinor, pointwise (physical).
SpinorField operator*(const ComplexField& f, const SpinorField& s);

/// beta = diag(1, -1).
SpinorField apply_beta(const SpinorField& s);
/// alpha swaps the components.
SpinorField apply_alpha(const SpinorField& s);

}  // namespace dirac
