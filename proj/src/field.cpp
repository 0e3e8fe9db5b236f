#include "dirac/field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {

// The FFTW planner (and plan destruction) is not re-entrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void require_same_layout(const ComplexField& a, const ComplexField& b) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument("field grids differ");
  }
  if (a.representation() != b.representation()) {
    throw std::invalid_argument("field representations differ");
  }
}

void require_physical(const ComplexField& f, const char* what) {
  if (!f.is_physical()) {
    throw std::invalid_argument(std::string(what) + " requires a physical-space field");
  }
}

}  // namespace

struct SpectralGrid::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit Plans(int n) {
    // ESTIMATE keeps plan choice (and so the rounding pattern) identical
    // across runs; UNALIGNED lets us execute on any std::vector buffer.
    std::vector<Complex> a(static_cast<std::size_t>(n));
    std::vector<Complex> b(static_cast<std::size_t>(n));
    auto* in = reinterpret_cast<fftw_complex*>(a.data());
    auto* out = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, flags);
    backward = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, flags);
    if (forward == nullptr || backward == nullptr) {
      throw std::runtime_error("FFTW planning failed");
    }
  }

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

SpectralGrid::SpectralGrid(int n_modes) : n_(n_modes) {
  if (n_modes < 4 || n_modes % 2 != 0) {
    throw std::invalid_argument("SpectralGrid: N must be even and >= 4, got " +
                                std::to_string(n_modes));
  }
  plans_ = std::make_shared<const Plans>(n_modes);
}

double SpectralGrid::point(int j) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
}

void SpectralGrid::forward(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != size() || out.size() != size()) {
    throw std::invalid_argument("SpectralGrid::forward: size mismatch");
  }
  if (in.data() == out.data()) {
    throw std::invalid_argument("SpectralGrid::forward: in-place transform not supported");
  }
  fftw_execute_dft(plans_->forward,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& c : out) c *= scale;
}

void SpectralGrid::inverse(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != size() || out.size() != size()) {
    throw std::invalid_argument("SpectralGrid::inverse: size mismatch");
  }
  if (in.data() == out.data()) {
    throw std::invalid_argument("SpectralGrid::inverse: in-place transform not supported");
  }
  fftw_execute_dft(plans_->backward,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

// ---------------------------------------------------------------------------

ComplexField::ComplexField(SpectralGrid grid, Representation rep)
    : grid_(std::move(grid)), values_(grid_.size()), rep_(rep) {}

ComplexField::ComplexField(SpectralGrid grid, std::vector<Complex> values, Representation rep)
    : grid_(std::move(grid)), values_(std::move(values)), rep_(rep) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("ComplexField: value count does not match grid");
  }
}

ComplexField ComplexField::constant(const SpectralGrid& grid, Complex c) {
  return ComplexField(grid, std::vector<Complex>(grid.size(), c), Representation::physical);
}

ComplexField ComplexField::sample(const SpectralGrid& grid,
                                  const std::function<Complex(double)>& f) {
  std::vector<Complex> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.point(static_cast<int>(j)));
  return ComplexField(grid, std::move(v), Representation::physical);
}

ComplexField ComplexField::to_spectral() const {
  if (rep_ == Representation::spectral) return *this;
  ComplexField out(grid_, Representation::spectral);
  grid_.forward(values_, out.values_);
  return out;
}

ComplexField ComplexField::to_physical() const {
  if (rep_ == Representation::physical) return *this;
  ComplexField out(grid_, Representation::physical);
  grid_.inverse(values_, out.values_);
  return out;
}

ComplexField ComplexField::conj() const {
  require_physical(*this, "conj");
  ComplexField out = *this;
  for (auto& v : out.values_) v = std::conj(v);
  return out;
}

ComplexField ComplexField::abs2() const {
  require_physical(*this, "abs2");
  ComplexField out = *this;
  for (auto& v : out.values_) v = std::norm(v);
  return out;
}

double ComplexField::max_abs_imag() const {
  require_physical(*this, "max_abs_imag");
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

ComplexField ComplexField::real_part() const {
  require_physical(*this, "real_part");
  ComplexField out = *this;
  for (auto& v : out.values_) v = v.real();
  return out;
}

bool ComplexField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

ComplexField& ComplexField::operator+=(const ComplexField& other) {
  require_same_layout(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& other) {
  require_same_layout(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ComplexField& ComplexField::operator*=(Complex s) noexcept {
  for (auto& v : values_) v *= s;
  return *this;
}

ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
ComplexField operator-(ComplexField a) { return a *= -1.0; }
ComplexField operator*(ComplexField a, Complex s) { return a *= s; }
ComplexField operator*(Complex s, ComplexField a) { return a *= s; }

ComplexField operator*(const ComplexField& a, const ComplexField& b) {
  require_same_layout(a, b);
  require_physical(a, "pointwise product");
  ComplexField out = a;
  auto ov = out.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < ov.size(); ++i) ov[i] *= bv[i];
  return out;
}

// ---------------------------------------------------------------------------

SpinorField SpinorField::zero(const SpectralGrid& grid, Representation rep) {
  return {ComplexField(grid, rep), ComplexField(grid, rep)};
}

SpinorField& SpinorField::operator+=(const SpinorField& o) {
  phi1 += o.phi1;
  phi2 += o.phi2;
  return *this;
}

SpinorField& SpinorField::operator-=(const SpinorField& o) {
  phi1 -= o.phi1;
  phi2 -= o.phi2;
  return *this;
}

SpinorField& SpinorField::operator*=(Complex s) noexcept {
  phi1 *= s;
  phi2 *= s;
  return *this;
}

SpinorField operator+(SpinorField a, const SpinorField& b) { return a += b; }
SpinorField operator-(SpinorField a, const SpinorField& b) { return a -= b; }
SpinorField operator*(SpinorField a, Complex s) { return a *= s; }
SpinorField operator*(Complex s, SpinorField a) { return a *= s; }

SpinorField operator*(const ComplexField& f, const SpinorField& s) {
  return {f * s.phi1, f * s.phi2};
}

SpinorField apply_beta(const SpinorField& s) { return {s.phi1, -s.phi2}; }
SpinorField apply_alpha(const SpinorField& s) { return {s.phi2, s.phi1}; }

}  // namespace dirac
