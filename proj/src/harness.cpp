#include "dirac/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "dirac/rough_data.hpp"

namespace dirac {

namespace {

long checked_steps(double tau, double t_final) {
  if (!(tau > 0.0)) throw std::invalid_argument("evolve: tau must be > 0");
  const double ratio = t_final / tau;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9) {
    throw std::invalid_argument("evolve: T/tau is not an integer");
  }
  return static_cast<long>(rounded);
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

EvolveResult run_steps(const SpinorField& phi0, SchemeId scheme, double tau, long steps,
                       std::shared_ptr<const ModelConfig> cfg) {
  const SpinorField start = phi0.to_physical();
  const double norm0 = sobolev_norm(start, 0.0);
  EvolveResult out{start, steps, 0.0, RunStatus::ok, {}};
  if (steps == 0) return out;
  SchemeState state = make_state(start, tau, std::move(cfg));
  for (long n = 0; n < steps; ++n) {
    state = step(scheme, state);
    if (!state.current.all_finite()) {
      out.status = RunStatus::blow_up;
      out.message = "non-finite state after step " + std::to_string(n + 1);
      out.steps = n + 1;
      out.final_state = std::move(state.current);
      out.l2_drift = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  out.final_state = std::move(state.current);
  out.l2_drift = norm0 > 0.0 ? std::abs(sobolev_norm(out.final_state, 0.0) - norm0) / norm0
                             : sobolev_norm(out.final_state, 0.0);
  return out;
}

}  // namespace

EvolveResult evolve(const SpinorField& phi0, SchemeId scheme, double tau, double t_final,
                    std::shared_ptr<const ModelConfig> cfg) {
  if (t_final < 0.0) throw std::invalid_argument("evolve: T must be >= 0");
  if (t_final == 0.0) {
    return EvolveResult{phi0, 0, 0.0, RunStatus::ok, {}};
  }
  return run_steps(phi0, scheme, tau, checked_steps(tau, t_final), std::move(cfg));
}

OrderFit fit_order(std::span<const std::pair<double, double>> pairs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [tau, err] : pairs) {
    if (!(tau > 0.0) || !(err > 0.0) || !std::isfinite(tau) || !std::isfinite(err)) continue;
    const double x = std::log(tau);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  OrderFit fit;
  fit.points = n;
  const double det = n * sxx - sx * sx;
  if (n < 3 || !(std::abs(det) > 0.0)) {
    fit.slope = std::numeric_limits<double>::quiet_NaN();
    fit.intercept = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.defined = true;
  return fit;
}

double relative_error(const SpinorField& reference, const SpinorField& approx, double r) {
  const SpinorField ref = reference.to_spectral();
  const SpinorField diff = ref - approx.to_spectral();
  const double denom = sobolev_norm(ref, r);
  if (!(denom > 0.0)) throw std::invalid_argument("relative_error: reference has zero norm");
  return sobolev_norm(diff, r) / denom;
}

const OrderFit& ConvergenceReport::fit_for(SchemeId id) const {
  for (const auto& f : fits) {
    if (f.scheme == id) return f.fit;
  }
  throw std::out_of_range("no fit for scheme " + std::string(to_string(id)));
}

std::vector<CellResult> ConvergenceReport::cells_for(SchemeId id) const {
  std::vector<CellResult> out;
  for (const auto& c : cells) {
    if (c.scheme == id) out.push_back(c);
  }
  return out;
}

std::vector<std::pair<double, long>> step_grid(const StudyConfig& cfg) {
  std::vector<std::pair<double, long>> grid;
  for (double tau : cfg.taus) {
    const long steps = std::max(1L, std::lround(cfg.t_final / tau));
    grid.emplace_back(cfg.t_final / static_cast<double>(steps), steps);
  }
  return grid;
}

ConvergenceReport assemble_report(const StudyConfig& cfg, const SpinorField& reference,
                                  const CellRunner& runner) {
  validate(cfg);
  ConvergenceReport report;
  report.config = cfg;
  report.saturation_floor = effective_saturation_floor(cfg);
  report.created_at = utc_timestamp();
  const auto grid = step_grid(cfg);

  for (SchemeId scheme : cfg.schemes) {
    std::vector<std::pair<double, double>> fit_points;
    for (const auto& [tau, steps] : grid) {
      CellResult cell{scheme, tau, steps, 0.0, 0.0, "ok"};
      try {
        EvolveResult r = runner(scheme, tau, steps);
        cell.l2_drift = r.l2_drift;
        if (r.status == RunStatus::blow_up) {
          cell.status = "blow_up";
          cell.error_rel = std::numeric_limits<double>::infinity();
        } else {
          cell.error_rel = relative_error(reference, r.final_state, cfg.error_r);
          if (!std::isfinite(cell.error_rel)) {
            cell.status = "blow_up";
          } else if (cell.error_rel < report.saturation_floor) {
            cell.status = "saturated";
          } else {
            fit_points.emplace_back(tau, cell.error_rel);
          }
        }
      } catch (const std::exception&) {
        cell.status = "blow_up";
        cell.error_rel = std::numeric_limits<double>::infinity();
      }
      report.cells.push_back(cell);
    }
    report.fits.push_back({scheme, fit_order(fit_points)});
  }
  return report;
}

ConvergenceReport run_convergence_study(const StudyConfig& cfg) {
  validate(cfg);
  const SpinorField reference = reference_solution(cfg).solution;
  const auto model = model_config(cfg);
  const SpinorField phi0 = initial_state(cfg);
  ConvergenceReport report =
      assemble_report(cfg, reference, [&](SchemeId scheme, double tau, long steps) {
        return run_steps(phi0, scheme, tau, steps, model);
      });
  if (!cfg.out.empty()) write_report(report, cfg.out);
  return report;
}

std::string report_csv(const ConvergenceReport& report) {
  std::string csv = "scheme,tau,steps,error_rel,l2_drift,status\n";
  for (const auto& c : report.cells) {
    csv += std::string(to_string(c.scheme)) + ',' + fmt17(c.tau) + ',' +
           std::to_string(c.steps) + ',' + fmt17(c.error_rel) + ',' + fmt17(c.l2_drift) + ',' +
           c.status + '\n';
  }
  return csv;
}

std::string report_metadata_json(const ConvergenceReport& report) {
  using nlohmann::json;
  json j;
  j["config"] = json::parse(to_json(report.config));
  j["rng"] = std::string(kRngIdentifier);
  j["reference_header"] = reference_header(report.config);
  j["saturation_floor"] = report.saturation_floor;
  j["created_at"] = report.created_at;
  json fits = json::object();
  for (const auto& f : report.fits) {
    json e;
    e["points"] = f.fit.points;
    e["defined"] = f.fit.defined;
    e["slope"] = f.fit.defined ? json(f.fit.slope) : json(nullptr);
    e["intercept"] = f.fit.defined ? json(f.fit.intercept) : json(nullptr);
    fits[std::string(to_string(f.scheme))] = e;
  }
  j["fits"] = fits;
  return j.dump(2);
}

void write_report(const ConvergenceReport& report, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report " + path);
    out << report_csv(report);
  }
  std::ofstream meta(path + ".meta.json", std::ios::binary | std::ios::trunc);
  if (!meta) throw std::runtime_error("cannot write report metadata for " + path);
  meta << report_metadata_json(report) << '\n';
}

}  // namespace dirac
