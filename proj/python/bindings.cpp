#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oscinfo/energy_info.hpp"
#include "oscinfo/errors.hpp"
#include "oscinfo/number_info.hpp"
#include "oscinfo/pde_verify.hpp"
#include "oscinfo/reports.hpp"
#include "oscinfo/spatial_info.hpp"
#include "oscinfo/verification.hpp"

namespace py = pybind11;
using namespace oscinfo;

namespace {

py::dict table_to_dict(const Table& table) {
  py::dict out;
  for (std::size_t j = 0; j < table.columns.size(); ++j) out[py::str(table.columns[j])] = table.column(j);
  return out;
}

}  // namespace

PYBIND11_MODULE(_oscinfo, m) {
  m.doc() = "C++ core of oscinfo";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<OscillatorConfig>(m, "OscillatorConfig")
      .def(py::init<double, double, double, double>(), py::arg("mass"), py::arg("angular_frequency"),
           py::arg("amplitude"), py::arg("hbar") = 1.0)
      .def_static("with_alpha", &OscillatorConfig::with_alpha, py::arg("alpha"))
      .def_property_readonly("mass", &OscillatorConfig::mass)
      .def_property_readonly("angular_frequency", &OscillatorConfig::angular_frequency)
      .def_property_readonly("amplitude", &OscillatorConfig::amplitude)
      .def_property_readonly("hbar", &OscillatorConfig::hbar)
      .def_property_readonly("alpha", &OscillatorConfig::alpha)
      .def_property_readonly("de_broglie_wavelength", &OscillatorConfig::de_broglie_wavelength)
      .def_property_readonly("quantum_energy", &OscillatorConfig::quantum_energy);

  py::class_<Coordinate>(m, "Coordinate")
      .def(py::init([](double xt, double t) { return Coordinate{xt, t}; }), py::arg("xt"), py::arg("t"))
      .def_readwrite("xt", &Coordinate::xt)
      .def_readwrite("t", &Coordinate::t);

  m.def("coherent_state", &coherent_state, py::arg("config"), py::arg("coord"));
  m.def("probability_density", &probability_density, py::arg("config"), py::arg("coord"));

  m.def("info_constant", &info_constant);
  m.def("info_density", &info_density, py::arg("config"), py::arg("coord"));
  m.def("total_information", &total_information, py::arg("config"), py::arg("t") = 0.0);
  m.def("differential_entropy", &differential_entropy, py::arg("config"));
  m.def("info_density_fwhm", &info_density_fwhm, py::arg("config"));
  m.def(
      "density_curve",
      [](const OscillatorConfig& config, double t, double xt_min, double xt_max, std::size_t n) {
        const InfoDensityCurve c = density_curve(config, t, Grid1D(xt_min, xt_max, n));
        py::dict out;
        out["xt"] = c.xt;
        out["y"] = c.y;
        out["density"] = c.density;
        return out;
      },
      py::arg("config"), py::arg("t"), py::arg("xt_min"), py::arg("xt_max"), py::arg("n_points"));

  py::class_<NumberStateInfo>(m, "NumberStateInfo")
      .def_readonly("mean", &NumberStateInfo::mean)
      .def_readonly("truncation", &NumberStateInfo::truncation)
      .def_readonly("information", &NumberStateInfo::information)
      .def_readonly("derivative", &NumberStateInfo::derivative)
      .def_readonly("tail_bound", &NumberStateInfo::tail_bound);
  m.def("mean_occupation", &mean_occupation, py::arg("config"));
  m.def("number_information", &number_information, py::arg("mean"), py::arg("tol") = 1e-13);
  m.def("number_info_density", &number_info_density, py::arg("mean"), py::arg("tol") = 1e-13);

  m.def("classical_energy", &classical_energy, py::arg("config"));
  m.def("energy_density", &energy_density, py::arg("config"), py::arg("coord"));
  m.def("energy_per_info", &energy_per_info, py::arg("config"), py::arg("coord"));

  py::class_<EnergyGapTerms>(m, "EnergyGapTerms")
      .def_readonly("action_rate", &EnergyGapTerms::action_rate)
      .def_readonly("kinetic", &EnergyGapTerms::kinetic)
      .def_readonly("potential", &EnergyGapTerms::potential)
      .def_readonly("gap", &EnergyGapTerms::gap);
  m.def("on_trajectory_energy_gap", &on_trajectory_energy_gap, py::arg("config"), py::arg("t"));

  py::class_<MasslessDualReport>(m, "MasslessDualReport")
      .def_readonly("energy", &MasslessDualReport::energy)
      .def_readonly("momentum", &MasslessDualReport::momentum)
      .def_readonly("particle_residual", &MasslessDualReport::particle_residual)
      .def_readonly("wave_residual", &MasslessDualReport::wave_residual)
      .def_readonly("de_broglie_mismatch", &MasslessDualReport::de_broglie_mismatch)
      .def_readonly("action_mismatch", &MasslessDualReport::action_mismatch);
  m.def("massless_dual_residuals", &massless_dual_residuals, py::arg("omega_wave"), py::arg("k"),
        py::arg("config"));

  m.def(
      "viscosity_fit_random",
      [](const OscillatorConfig& config, std::vector<std::uint64_t> seeds, std::size_t n_points) {
        std::vector<SampledComplexField> fields;
        for (auto seed : seeds) {
          const BandLimitedField f = BandLimitedField::random(seed, 8, 3.0, 2.0);
          fields.push_back(sample_field(Grid1D(-1.0, 1.0, n_points), 0.0, 1,
                                        [&f](double xt, double t) { return f(xt, t); }));
        }
        return viscosity_fit(fields, config).nu;
      },
      py::arg("config"), py::arg("seeds"), py::arg("n_points") = 4001,
      "Least-squares viscosity over random band-limited fields on [-1, 1].");

  m.def(
      "evolve_coherent_state",
      [](double alpha, double periods, std::size_t n_points, double dt, std::size_t record_every) {
        EvolveRequest req;
        req.alpha = alpha;
        req.periods = periods;
        req.n_points = n_points;
        req.dt = dt;
        req.record_every = record_every;
        Table t;
        {
          py::gil_scoped_release release;
          t = evolve_table(req);
        }
        return table_to_dict(t);
      },
      py::arg("alpha") = 5.0, py::arg("periods") = 1.0, py::arg("n_points") = 2048, py::arg("dt") = 1e-3,
      py::arg("record_every") = 10, "Columns t, norm, mean_xt, overlap.");

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("criterion", &CheckResult::criterion)
      .def_readonly("name", &CheckResult::name)
      .def_readonly("measured", &CheckResult::measured)
      .def_readonly("bound", &CheckResult::bound)
      .def_property_readonly("status",
                             [](const CheckResult& r) {
                               return r.status == CheckStatus::pass   ? "pass"
                                      : r.status == CheckStatus::fail ? "fail"
                                                                      : "info";
                             })
      .def_readonly("detail", &CheckResult::detail)
      .def("__str__", &format_check);
  m.def(
      "run_verification_suite",
      [](double nu_perturbation, double series_tol) {
        VerifyOptions o;
        o.nu_perturbation = nu_perturbation;
        o.series_tol = series_tol;
        py::gil_scoped_release release;
        return run_verification_suite(o);
      },
      py::arg("nu_perturbation") = 0.0, py::arg("series_tol") = 1e-13);
  m.def("all_passed", &all_passed, py::arg("results"));
}
