#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirac/model.hpp"
#include "dirac/schemes.hpp"

namespace dirac {

enum class InitialKind { rough, smooth };

/// Everything that defines a convergence study. Mirrors the keys accepted
/// by parse_study_config one to one.
struct StudyConfig {
  PotentialKind potential = PotentialKind::external;
  double lambda = 1.0;
  InitialKind initial = InitialKind::rough;
  double theta = 2.4;
  int n_modes = 4096;
  double t_final = 1.0;
  std::vector<double> taus = default_taus();
  double error_r = 2.0;
  SchemeId reference_scheme = SchemeId::STRANG;
  double reference_tau = 1e-5;
  std::uint64_t seed = 1;
  std::vector<SchemeId> schemes{kAllSchemes.begin(), kAllSchemes.end()};
  bool dealias = false;
  /// Cells with a relative error below this are treated as saturated at the
  /// reference accuracy and left out of the slope fit. Negative selects
  /// 10 * reference_tau^2.
  double saturation_floor = -1.0;
  std::string out;             // CSV report path; empty disables writing
  std::string reference_dir;   // reference cache directory; empty disables caching
  std::string reference_path;  // explicit reference file, overrides reference_dir

  /// tau_k = 0.1 * 2^{-k}, k = 0..7.
  static std::vector<double> default_taus();
};

/// Throws std::invalid_argument on violated invariants (tau > tau_ref, r >= 0,
/// N even >= 4, T > 0, at least one scheme).
void validate(const StudyConfig& cfg);

/// Flat JSON object; unknown keys are rejected with std::invalid_argument.
StudyConfig parse_study_config(const std::string& text);
StudyConfig load_study_config(const std::string& path);
std::string to_json(const StudyConfig& cfg);

double effective_saturation_floor(const StudyConfig& cfg);

/// Model configuration for a study: V_e = 2 sin x or the Poisson model.
std::shared_ptr<const ModelConfig> model_config(const StudyConfig& cfg);
SpinorField initial_state(const StudyConfig& cfg);

enum class RunStatus { ok, blow_up };

struct EvolveResult {
  SpinorField final_state;
  long steps = 0;
  /// |‖Phi(T)‖_L2 - ‖Phi0‖_L2| / ‖Phi0‖_L2.
  double l2_drift = 0.0;
  RunStatus status = RunStatus::ok;
  std::string message;
};

/// Applies round(T/tau) steps. Throws std::invalid_argument if T/tau is not
/// within 1e-9 of an integer. A non-finite state stops the trajectory and is
/// reported as RunStatus::blow_up.
EvolveResult evolve(const SpinorField& phi0, SchemeId scheme, double tau, double t_final,
                    std::shared_ptr<const ModelConfig> cfg);

struct OrderFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
  bool defined = false;
};

/// Least squares of log(error) against log(tau). Pairs with non-positive or
/// non-finite entries are skipped; fewer than 3 usable pairs leave the fit
/// undefined.
OrderFit fit_order(std::span<const std::pair<double, double>> pairs);

/// ‖ref - approx‖_r / ‖ref‖_r, computed on spectral coefficients.
double relative_error(const SpinorField& reference, const SpinorField& approx, double r);

// --- reference solutions -------------------------------------------------

inline constexpr std::string_view kReferenceMagic = "NDEREF1";

/// Metadata line (without newline) identifying a reference solution.
std::string reference_header(const StudyConfig& cfg);

/// Writes "NDEREF1\n", header, "\n", then 2 x N coefficients as little-endian
/// IEEE-754 (re, im) pairs in FFT mode order.
void write_reference_file(const std::string& path, const std::string& header,
                          const SpinorField& solution);

struct ReferenceFile {
  std::string header;
  SpinorField solution;  // spectral
};

/// Throws std::runtime_error on a malformed file.
ReferenceFile read_reference_file(const std::string& path);

struct ReferenceResult {
  SpinorField solution;  // physical
  bool from_cache = false;
  std::string path;
};

/// Path the reference for cfg is cached under, empty if caching is off.
std::string reference_cache_path(const StudyConfig& cfg);

/// Reference trajectory at tau_ref. A cached file is reused only if its
/// header matches bit for bit; otherwise it is recomputed and overwritten.
ReferenceResult reference_solution(const StudyConfig& cfg);

// --- convergence studies --------------------------------------------------

struct CellResult {
  SchemeId scheme;
  double tau = 0.0;
  long steps = 0;
  double error_rel = 0.0;
  double l2_drift = 0.0;
  std::string status;  // ok | saturated | blow_up
};

struct SchemeFit {
  SchemeId scheme;
  OrderFit fit;
};

struct ConvergenceReport {
  StudyConfig config;
  std::vector<CellResult> cells;
  std::vector<SchemeFit> fits;
  double saturation_floor = 0.0;
  std::string created_at;

  const OrderFit& fit_for(SchemeId id) const;
  std::vector<CellResult> cells_for(SchemeId id) const;
};

/// Runs one (scheme, tau, steps) cell.
using CellRunner = std::function<EvolveResult(SchemeId, double tau, long steps)>;

/// Effective (T/steps) step sizes for the configured tau list.
std::vector<std::pair<double, long>> step_grid(const StudyConfig& cfg);

ConvergenceReport assemble_report(const StudyConfig& cfg, const SpinorField& reference,
                                  const CellRunner& runner);

ConvergenceReport run_convergence_study(const StudyConfig& cfg);

/// Columns scheme,tau,steps,error_rel,l2_drift,status.
std::string report_csv(const ConvergenceReport& report);
/// Config echo, RNG identifier, fitted slopes and a timestamp.
std::string report_metadata_json(const ConvergenceReport& report);
/// Writes the CSV to path and the metadata to path + ".meta.json".
void write_report(const ConvergenceReport& report, const std::string& path);

}  // namespace dirac
