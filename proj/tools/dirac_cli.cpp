// dirac_study: single trajectories, reference solutions and convergence
// studies for the nonlinear Dirac / Dirac-Poisson models.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirac/harness.hpp"

namespace {

using namespace dirac;

struct Overrides {
  std::optional<std::string> potential;
  std::optional<double> lambda;
  std::optional<std::string> initial;
  std::optional<double> theta;
  std::optional<int> n_modes;
  std::optional<double> t_final;
  std::optional<std::string> tau_list;
  std::optional<double> error_r;
  std::optional<double> reference_tau;
  std::optional<std::string> reference_scheme;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> schemes;
  std::optional<std::string> reference_dir;
  std::optional<std::string> out;
  std::optional<std::string> config;
  bool dealias = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_model_options(CLI::App* app, Overrides& o) {
  app->add_option("--potential", o.potential, "external | poisson")
      ->check(CLI::IsMember({"external", "poisson"}));
  app->add_option("--lambda", o.lambda, "Nonlinearity strength");
  app->add_option("--initial", o.initial, "rough | smooth")
      ->check(CLI::IsMember({"rough", "smooth"}));
  app->add_option("--theta", o.theta, "Sobolev exponent of rough data");
  app->add_option("--n-modes", o.n_modes, "Grid size N (even, >= 4)");
  app->add_option("--t-final", o.t_final, "Final time T");
  app->add_option("--seed", o.seed, "Seed for rough data");
  app->add_option("--config", o.config, "JSON study config; flags override its values");
  app->add_flag("--dealias", o.dealias, "2/3 truncation after every step");
}

StudyConfig resolve(const Overrides& o) {
  StudyConfig c = o.config ? load_study_config(*o.config) : StudyConfig{};
  if (o.potential) c.potential = *o.potential == "poisson" ? PotentialKind::poisson : PotentialKind::external;
  if (o.lambda) c.lambda = *o.lambda;
  if (o.initial) c.initial = *o.initial == "smooth" ? InitialKind::smooth : InitialKind::rough;
  if (o.theta) c.theta = *o.theta;
  if (o.n_modes) c.n_modes = *o.n_modes;
  if (o.t_final) c.t_final = *o.t_final;
  if (o.tau_list) {
    c.taus.clear();
    for (const auto& t : split_list(*o.tau_list)) c.taus.push_back(std::stod(t));
  }
  if (o.error_r) c.error_r = *o.error_r;
  if (o.reference_tau) c.reference_tau = *o.reference_tau;
  if (o.reference_scheme) c.reference_scheme = parse_scheme(*o.reference_scheme);
  if (o.seed) c.seed = *o.seed;
  if (o.schemes) {
    c.schemes.clear();
    for (const auto& s : split_list(*o.schemes)) c.schemes.push_back(parse_scheme(s));
  }
  if (o.reference_dir) c.reference_dir = *o.reference_dir;
  if (o.out) c.out = *o.out;
  if (o.dealias) c.dealias = true;
  return c;
}

int cmd_run(const Overrides& o, const std::string& scheme_name, double tau) {
  StudyConfig c = resolve(o);
  const SchemeId scheme = parse_scheme(scheme_name);
  const auto model = model_config(c);
  const EvolveResult r = evolve(initial_state(c), scheme, tau, c.t_final, model);
  std::printf("scheme=%s steps=%ld status=%s l2_drift=%.6e\n", std::string(to_string(scheme)).c_str(),
              r.steps, r.status == RunStatus::ok ? "ok" : "blow_up", r.l2_drift);
  if (r.status != RunStatus::ok) {
    std::fprintf(stderr, "%s\n", r.message.c_str());
    return 2;
  }
  std::printf("norm_L2=%.12e norm_H1=%.12e\n", sobolev_norm(r.final_state, 0.0),
              sobolev_norm(r.final_state, 1.0));
  if (!c.out.empty()) {
    StudyConfig meta = c;
    meta.reference_scheme = scheme;
    meta.reference_tau = tau;
    write_reference_file(c.out, reference_header(meta), r.final_state);
    std::printf("wrote %s\n", c.out.c_str());
  }
  return 0;
}

int cmd_reference(const Overrides& o) {
  StudyConfig c = resolve(o);
  if (!c.out.empty()) c.reference_path = c.out;
  if (c.reference_path.empty() && c.reference_dir.empty()) c.reference_dir = ".";
  const ReferenceResult r = reference_solution(c);
  std::printf("%s %s\n", r.from_cache ? "cached" : "computed", r.path.c_str());
  return 0;
}

int cmd_study(const Overrides& o) {
  const StudyConfig c = resolve(o);
  const ConvergenceReport rep = run_convergence_study(c);
  std::printf("%-7s %8s %6s\n", "scheme", "slope", "points");
  for (const auto& f : rep.fits) {
    if (f.fit.defined) {
      std::printf("%-7s %8.3f %6d\n", std::string(to_string(f.scheme)).c_str(), f.fit.slope,
                  f.fit.points);
    } else {
      std::printf("%-7s %8s %6d\n", std::string(to_string(f.scheme)).c_str(), "n/a",
                  f.fit.points);
    }
  }
  if (c.out.empty()) std::fputs(report_csv(rep).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time integrators for the nonlinear Dirac equation"};
  app.require_subcommand(1);

  Overrides run_o, ref_o, study_o;
  std::string run_scheme = "ULI1";
  double run_tau = 1e-2;

  auto* run = app.add_subcommand("run", "Integrate a single trajectory");
  add_model_options(run, run_o);
  run->add_option("--scheme", run_scheme, "FD1 FD2 EI1 EI2 LIE STRANG ULI1 ULI2");
  run->add_option("--tau", run_tau, "Step size; T/tau must be an integer");
  run->add_option("--out", run_o.out, "Write the final state in reference-file format");

  auto* ref = app.add_subcommand("reference", "Build or reuse a cached reference solution");
  add_model_options(ref, ref_o);
  ref->add_option("--scheme", ref_o.reference_scheme, "Reference scheme (default STRANG)");
  ref->add_option("--reference-tau", ref_o.reference_tau, "Reference step size");
  ref->add_option("--reference-dir", ref_o.reference_dir, "Cache directory");
  ref->add_option("--out", ref_o.out, "Explicit reference file path");

  auto* study = app.add_subcommand("study", "Convergence matrix over schemes and step sizes");
  add_model_options(study, study_o);
  study->add_option("--scheme", study_o.schemes, "Comma separated scheme list");
  study->add_option("--tau-list", study_o.tau_list, "Comma separated step sizes");
  study->add_option("--error-r", study_o.error_r, "Sobolev exponent of the error norm");
  study->add_option("--reference-tau", study_o.reference_tau, "Reference step size");
  study->add_option("--reference-dir", study_o.reference_dir, "Reference cache directory");
  study->add_option("--out", study_o.out, "CSV report path (metadata goes to <out>.meta.json)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_o, run_scheme, run_tau);
    if (*ref) return cmd_reference(ref_o);
    if (*study) return cmd_study(study_o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
