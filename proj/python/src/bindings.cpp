#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dirac/harness.hpp"
#include "dirac/rough_data.hpp"

namespace py = pybind11;
using namespace dirac;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexField to_field(const SpectralGrid& grid, const CArray& a) {
  if (a.ndim() != 1 || static_cast<std::size_t>(a.size()) != grid.size())
    throw std::invalid_argument("expected a 1-D array of length " + std::to_string(grid.size()));
  return ComplexField(grid, std::vector<Complex>(a.data(), a.data() + a.size()),
                      Representation::physical);
}

SpinorField to_spinor(const CArray& phi1, const CArray& phi2) {
  const SpectralGrid grid(static_cast<int>(phi1.size()));
  return {to_field(grid, phi1), to_field(grid, phi2)};
}

CArray to_array(const ComplexField& f) {
  const ComplexField p = f.to_physical();
  CArray out(static_cast<py::ssize_t>(p.size()));
  std::copy(p.values().begin(), p.values().end(), out.mutable_data());
  return out;
}

py::tuple to_tuple(const SpinorField& s) { return py::make_tuple(to_array(s.phi1), to_array(s.phi2)); }

StudyConfig model_only(const std::string& potential, double lambda, int n, bool dealias) {
  StudyConfig c;
  if (potential != "poisson" && potential != "external")
    throw std::invalid_argument("potential must be 'external' or 'poisson'");
  c.potential = potential == "poisson" ? PotentialKind::poisson : PotentialKind::external;
  c.lambda = lambda;
  c.n_modes = n;
  c.dealias = dealias;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Time integrators for the 1D nonlinear Dirac and Dirac-Poisson equations";

  m.def("schemes", [] {
    std::vector<std::string> names;
    for (SchemeId id : kAllSchemes) names.emplace_back(to_string(id));
    return names;
  });

  m.def(
      "rough_data",
      [](double theta, int n, std::uint64_t seed) {
        return to_tuple(generate_rough_spinor({theta, n, seed}));
      },
      py::arg("theta"), py::arg("n_modes"), py::arg("seed") = 1,
      "Random spinor with |l|^-theta Fourier decay, max modulus 1.");

  m.def(
      "smooth_profile", [](int n) { return to_tuple(smooth_profile(SpectralGrid(n))); },
      py::arg("n_modes"));

  m.def(
      "sobolev_norm",
      [](const CArray& phi1, const CArray& phi2, double r) {
        return sobolev_norm(to_spinor(phi1, phi2), r);
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("r"));

  m.def(
      "evolve",
      [](const CArray& phi1, const CArray& phi2, const std::string& scheme, double tau,
         double t_final, const std::string& potential, double lambda, bool dealias) {
        const SpinorField phi0 = to_spinor(phi1, phi2);
        const StudyConfig c = model_only(potential, lambda, static_cast<int>(phi1.size()), dealias);
        const SchemeId id = parse_scheme(scheme);
        const auto model = model_config(c);
        std::optional<EvolveResult> res;
        {
          py::gil_scoped_release release;
          res.emplace(evolve(phi0, id, tau, t_final, model));
        }
        const EvolveResult& r = *res;
        py::dict out;
        out["phi1"] = to_array(r.final_state.phi1);
        out["phi2"] = to_array(r.final_state.phi2);
        out["steps"] = r.steps;
        out["l2_drift"] = r.l2_drift;
        out["status"] = r.status == RunStatus::ok ? "ok" : "blow_up";
        return out;
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("scheme"), py::arg("tau"), py::arg("t_final"),
      py::arg("potential") = "external", py::arg("lambda_") = 1.0, py::arg("dealias") = false);

  m.def(
      "fit_order",
      [](const std::vector<double>& taus, const std::vector<double>& errors) {
        if (taus.size() != errors.size()) throw std::invalid_argument("length mismatch");
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < taus.size(); ++i) pts.emplace_back(taus[i], errors[i]);
        const OrderFit f = fit_order(pts);
        return py::make_tuple(f.slope, f.intercept, f.points);
      },
      py::arg("taus"), py::arg("errors"), "Least-squares slope of log error vs log tau.");

  m.def(
      "run_study",
      [](const std::string& config_json) {
        const StudyConfig c = parse_study_config(config_json);
        ConvergenceReport rep;
        {
          py::gil_scoped_release release;
          rep = run_convergence_study(c);
        }
        py::dict fits;
        for (const auto& f : rep.fits) fits[py::str(std::string(to_string(f.scheme)))] = f.fit.slope;
        py::dict out;
        out["csv"] = report_csv(rep);
        out["slopes"] = fits;
        out["saturation_floor"] = rep.saturation_floor;
        return out;
      },
      py::arg("config_json"), "Run a convergence study from a JSON config string.");
}
