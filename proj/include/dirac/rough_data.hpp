#pragma once

#include <cstdint>
#include <string_view>

#include "dirac/field.hpp"

namespace dirac {

/// Identifier of the random stream used for initial data; stored in every
/// report and reference header.
inline constexpr std::string_view kRngIdentifier = "mt19937_64/u53";

struct RoughDataSpec {
  double theta = 0.0;
  int n_modes = 0;
  std::uint64_t seed = 0;
};

/// Random H^theta spinor: per component, uniform [0,1) noise U = u_re + i u_im on
/// the grid, smoothed by |d_x|^{-theta} (zero mode removed) and divided by its
/// max modulus. Draw order: component 1 real parts j = 0..N-1, then its
/// imaginary parts, then component 2 likewise, all from one mt19937_64 stream
/// seeded with spec.seed. Doubles are (x >> 11) * 2^-53.
SpinorField generate_rough_spinor(const RoughDataSpec& spec);

/// Smooth analytic profile phi1 = e^{ix}/(2 + cos x), phi2 = e^{-ix}/(2 + sin x).
SpinorField smooth_profile(const SpectralGrid& grid);

}  // namespace dirac
