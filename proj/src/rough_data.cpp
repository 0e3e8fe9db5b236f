#include "dirac/rough_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dirac {

namespace {

double next_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

ComplexField smoothed_noise(const SpectralGrid& grid, double theta, std::mt19937_64& gen) {
  const std::size_t n = grid.size();
  std::vector<Complex> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j].real(next_unit(gen));
  for (std::size_t j = 0; j < n; ++j) u[j].imag(next_unit(gen));

  ComplexField c = ComplexField(grid, std::move(u), Representation::physical).to_spectral();
  for (std::size_t k = 0; k < n; ++k) {
    const int l = grid.wavenumber(k);
    c[k] = l == 0 ? Complex(0.0) : c[k] * std::pow(static_cast<double>(std::abs(l)), -theta);
  }
  ComplexField f = c.to_physical();
  double sup = 0.0;
  for (const auto& v : f.values()) sup = std::max(sup, std::abs(v));
  if (!(sup > 0.0)) throw std::runtime_error("rough data: smoothed noise vanished");
  f *= 1.0 / sup;
  return f;
}

}  // namespace

SpinorField generate_rough_spinor(const RoughDataSpec& spec) {
  if (!(spec.theta >= 0.0)) throw std::invalid_argument("rough data: theta must be >= 0");
  const SpectralGrid grid(spec.n_modes);
  std::mt19937_64 gen(spec.seed);
  ComplexField first = smoothed_noise(grid, spec.theta, gen);
  ComplexField second = smoothed_noise(grid, spec.theta, gen);
  return {std::move(first), std::move(second)};
}

SpinorField smooth_profile(const SpectralGrid& grid) {
  return {ComplexField::sample(grid,
                               [](double x) { return std::polar(1.0, x) / (2.0 + std::cos(x)); }),
          ComplexField::sample(grid,
                               [](double x) { return std::polar(1.0, -x) / (2.0 + std::sin(x)); })};
}

}  // namespace dirac
