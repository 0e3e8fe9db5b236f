#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dirac/harness.hpp"
#include "dirac/rough_data.hpp"

namespace dirac {

using nlohmann::json;

std::vector<double> StudyConfig::default_taus() {
  std::vector<double> taus;
  for (int k = 0; k <= 7; ++k) taus.push_back(0.1 * std::ldexp(1.0, -k));
  return taus;
}

void validate(const StudyConfig& cfg) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("study config: " + msg); };
  if (cfg.n_modes < 4 || cfg.n_modes % 2 != 0) fail("n_modes must be even and >= 4");
  if (!(cfg.t_final > 0.0) || !std::isfinite(cfg.t_final)) fail("t_final must be > 0");
  if (!(cfg.reference_tau > 0.0)) fail("reference_tau must be > 0");
  if (!(cfg.error_r >= 0.0)) fail("error_r must be >= 0");
  if (!std::isfinite(cfg.lambda)) fail("lambda must be finite");
  if (cfg.initial == InitialKind::rough && !(cfg.theta >= 0.0)) fail("theta must be >= 0");
  if (cfg.schemes.empty()) fail("at least one scheme is required");
  if (cfg.taus.empty()) fail("tau list is empty");
  for (double tau : cfg.taus) {
    if (!(tau > cfg.reference_tau)) fail("every tau must exceed reference_tau");
    if (tau > cfg.t_final) fail("tau larger than t_final");
  }
}

namespace {

PotentialKind parse_potential(const std::string& s) {
  if (s == "external") return PotentialKind::external;
  if (s == "poisson") return PotentialKind::poisson;
  throw std::invalid_argument("unknown potential '" + s + "' (external|poisson)");
}

InitialKind parse_initial(const std::string& s) {
  if (s == "rough") return InitialKind::rough;
  if (s == "smooth") return InitialKind::smooth;
  throw std::invalid_argument("unknown initial data '" + s + "' (rough|smooth)");
}

const std::set<std::string> kKeys = {
    "potential",   "lambda",       "initial",          "theta",         "n_modes",
    "t_final",     "taus",         "error_r",          "reference_scheme", "reference_tau",
    "seed",        "schemes",      "dealias",          "saturation_floor", "out",
    "reference_dir", "reference_path"};

}  // namespace

StudyConfig parse_study_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("study config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("study config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) throw std::invalid_argument("study config: unknown key '" + key + "'");
  }

  StudyConfig cfg;
  try {
    if (j.contains("potential")) cfg.potential = parse_potential(j["potential"].get<std::string>());
    if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
    if (j.contains("initial")) cfg.initial = parse_initial(j["initial"].get<std::string>());
    if (j.contains("theta")) cfg.theta = j["theta"].get<double>();
    if (j.contains("n_modes")) cfg.n_modes = j["n_modes"].get<int>();
    if (j.contains("t_final")) cfg.t_final = j["t_final"].get<double>();
    if (j.contains("taus")) cfg.taus = j["taus"].get<std::vector<double>>();
    if (j.contains("error_r")) cfg.error_r = j["error_r"].get<double>();
    if (j.contains("reference_scheme"))
      cfg.reference_scheme = parse_scheme(j["reference_scheme"].get<std::string>());
    if (j.contains("reference_tau")) cfg.reference_tau = j["reference_tau"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("schemes")) {
      cfg.schemes.clear();
      for (const auto& s : j["schemes"]) cfg.schemes.push_back(parse_scheme(s.get<std::string>()));
    }
    if (j.contains("dealias")) cfg.dealias = j["dealias"].get<bool>();
    if (j.contains("saturation_floor")) cfg.saturation_floor = j["saturation_floor"].get<double>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("reference_dir")) cfg.reference_dir = j["reference_dir"].get<std::string>();
    if (j.contains("reference_path")) cfg.reference_path = j["reference_path"].get<std::string>();
  } catch (const json::type_error& e) {
    throw std::invalid_argument(std::string("study config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

StudyConfig load_study_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_study_config(ss.str());
}

std::string to_json(const StudyConfig& cfg) {
  json j;
  j["potential"] = cfg.potential == PotentialKind::external ? "external" : "poisson";
  j["lambda"] = cfg.lambda;
  j["initial"] = cfg.initial == InitialKind::rough ? "rough" : "smooth";
  j["theta"] = cfg.theta;
  j["n_modes"] = cfg.n_modes;
  j["t_final"] = cfg.t_final;
  j["taus"] = cfg.taus;
  j["error_r"] = cfg.error_r;
  j["reference_scheme"] = std::string(to_string(cfg.reference_scheme));
  j["reference_tau"] = cfg.reference_tau;
  j["seed"] = cfg.seed;
  std::vector<std::string> names;
  for (SchemeId s : cfg.schemes) names.emplace_back(to_string(s));
  j["schemes"] = names;
  j["dealias"] = cfg.dealias;
  j["saturation_floor"] = cfg.saturation_floor;
  j["out"] = cfg.out;
  j["reference_dir"] = cfg.reference_dir;
  j["reference_path"] = cfg.reference_path;
  return j.dump(2);
}

double effective_saturation_floor(const StudyConfig& cfg) {
  if (cfg.saturation_floor >= 0.0) return cfg.saturation_floor;
  return 10.0 * cfg.reference_tau * cfg.reference_tau;
}

std::shared_ptr<const ModelConfig> model_config(const StudyConfig& cfg) {
  SpectralGrid grid(cfg.n_modes);
  ModelConfig m = cfg.potential == PotentialKind::external
                      ? make_external_config(grid, cfg.lambda, default_external_potential(grid))
                      : make_poisson_config(grid, cfg.lambda);
  m.dealias = cfg.dealias;
  return std::make_shared<const ModelConfig>(std::move(m));
}

SpinorField initial_state(const StudyConfig& cfg) {
  SpinorField phi = cfg.initial == InitialKind::smooth
                        ? smooth_profile(SpectralGrid(cfg.n_modes))
                        : generate_rough_spinor({cfg.theta, cfg.n_modes, cfg.seed});
  // With dealiasing on, the trajectory lives on |l| <= N/3 from the start.
  if (cfg.dealias) phi = {two_thirds_truncation(phi.phi1), two_thirds_truncation(phi.phi2)};
  return phi;
}

}  // namespace dirac
