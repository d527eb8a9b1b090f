#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringgate/analysis.hpp"
#include "ringgate/angles.hpp"
#include "ringgate/closed_form.hpp"
#include "ringgate/gates.hpp"
#include "ringgate/oracle.hpp"
#include "ringgate/spin_core.hpp"
#include "ringgate/units.hpp"

namespace py = pybind11;
using namespace ringgate;

namespace {

Range to_range(std::pair<double, double> r) { return {r.first, r.second}; }

}  // namespace

PYBIND11_MODULE(_ringgate, m) {
  m.doc() = "Closed-form and boundary-matching spin transmission of Rashba quantum rings";

  py::register_exception<DegeneratePointError>(m, "DegeneratePointError", PyExc_ArithmeticError);
  py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_ArithmeticError);
  py::register_exception<ConservationError>(m, "ConservationError", PyExc_RuntimeError);

  py::class_<RingConfig>(m, "RingConfig")
      .def(py::init([](double ka, double x, double gamma) { return RingConfig{ka, x, gamma}; }), py::arg("ka"),
           py::arg("x"), py::arg("gamma") = pi)
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2 && t.size() != 3) throw InvalidArgument("RingConfig tuple must be (ka, x[, gamma])");
        return RingConfig{t[0].cast<double>(), t[1].cast<double>(), t.size() == 3 ? t[2].cast<double>() : pi};
      }))
      .def_readwrite("ka", &RingConfig::ka)
      .def_readwrite("x", &RingConfig::x)
      .def_readwrite("gamma", &RingConfig::gamma)
      .def("__repr__", [](const RingConfig& c) {
        return "RingConfig(ka=" + std::to_string(c.ka) + ", x=" + std::to_string(c.x) +
               ", gamma=" + std::to_string(c.gamma) + ")";
      });
  py::implicitly_convertible<py::tuple, RingConfig>();

  py::class_<SpectralSet>(m, "SpectralSet")
      .def_readonly("w", &SpectralSet::w)
      .def_readonly("theta", &SpectralSet::theta)
      .def_readonly("q", &SpectralSet::q)
      .def_readonly("phi_plus", &SpectralSet::phi_plus)
      .def_readonly("phi_minus", &SpectralSet::phi_minus)
      .def("kappa", &SpectralSet::kappa_of, py::arg("j"), py::arg("mu"));

  py::class_<TransmissionDecomposition>(m, "TransmissionDecomposition")
      .def_readonly("t_mag", &TransmissionDecomposition::t_mag)
      .def_readonly("delta", &TransmissionDecomposition::delta)
      .def_readonly("delta0", &TransmissionDecomposition::delta0)
      .def_readonly("delta_plus", &TransmissionDecomposition::delta_plus)
      .def_readonly("delta_minus", &TransmissionDecomposition::delta_minus)
      .def_readonly("U", &TransmissionDecomposition::U)
      .def_readonly("T", &TransmissionDecomposition::T);

  py::class_<BranchAmplitudes>(m, "BranchAmplitudes")
      .def_readonly("plus", &BranchAmplitudes::plus)
      .def_readonly("minus", &BranchAmplitudes::minus)
      .def_readonly("denominator", &BranchAmplitudes::denominator);

  py::class_<ScatteringSolution>(m, "ScatteringSolution")
      .def_readonly("T", &ScatteringSolution::Tmat)
      .def_readonly("R", &ScatteringSolution::Rmat)
      .def_readonly("residual", &ScatteringSolution::residual)
      .def_readonly("conservation_defect", &ScatteringSolution::conservation_defect)
      .def_readonly("condition_estimate", &ScatteringSolution::condition_estimate);

  py::enum_<GateKind>(m, "GateKind")
      .value("Phase", GateKind::Phase)
      .value("Rotation", GateKind::Rotation)
      .value("Generic", GateKind::Generic);

  py::class_<GateSequence>(m, "GateSequence")
      .def_readonly("items", &GateSequence::items)
      .def_readonly("link_phases", &GateSequence::link_phases)
      .def_readonly("element_matrices", &GateSequence::element_matrices)
      .def_readonly("element_efficiency", &GateSequence::element_efficiency)
      .def_readonly("composed", &GateSequence::composed)
      .def_readonly("total_efficiency", &GateSequence::total_efficiency)
      .def_readonly("warnings", &GateSequence::warnings);

  py::class_<ScanGrid>(m, "ScanGrid")
      .def_readonly("ka_axis", &ScanGrid::ka_axis)
      .def_readonly("x_axis", &ScanGrid::x_axis)
      .def_readonly("gamma", &ScanGrid::gamma)
      .def_property_readonly("t_mag",
                             [](const ScanGrid& g) {
                               Eigen::MatrixXd out(g.ka_axis.size(), g.x_axis.size());
                               for (std::size_t i = 0; i < g.ka_axis.size(); ++i)
                                 for (std::size_t j = 0; j < g.x_axis.size(); ++j) out(i, j) = g.at(i, j).t_mag;
                               return out;
                             })
      .def_property_readonly("delta", [](const ScanGrid& g) {
        Eigen::MatrixXd out(g.ka_axis.size(), g.x_axis.size());
        for (std::size_t i = 0; i < g.ka_axis.size(); ++i)
          for (std::size_t j = 0; j < g.x_axis.size(); ++j) out(i, j) = g.at(i, j).delta;
        return out;
      });

  py::class_<CurvePoint>(m, "CurvePoint")
      .def_readonly("ka", &CurvePoint::ka)
      .def_readonly("x", &CurvePoint::x)
      .def_readonly("t_mag", &CurvePoint::t_mag)
      .def_readonly("delta", &CurvePoint::delta);

  py::class_<Curve>(m, "Curve")
      .def_readonly("gamma", &Curve::gamma)
      .def_readonly("points", &Curve::points)
      .def_readonly("touches_x_min", &Curve::touches_x_min);

  m.def("parse_angle", &parse_angle, py::arg("text"));
  m.def("spectral_params", &spectral_params, py::arg("cfg"));
  m.def("eigenspinor", &eigenspinor, py::arg("mu"), py::arg("x"));
  m.def("branch_amplitudes", &branch_amplitudes, py::arg("cfg"));
  m.def("transmission", &transmission, py::arg("cfg"));
  m.def("transmission_diametric", &transmission_diametric, py::arg("ka"), py::arg("x"));
  m.def(
      "classify_gate",
      [](const RingConfig& cfg, double tol) {
        const GateLabel l = classify_gate(transmission(cfg), cfg, tol);
        return py::make_tuple(l.kind, l.angle);
      },
      py::arg("cfg"), py::arg("tol") = 1e-8);
  m.def(
      "solve_scattering", [](const RingConfig& cfg) { return solve_scattering(cfg); }, py::arg("cfg"));
  m.def("fidelity_up_to_phase", &fidelity_up_to_phase, py::arg("a"), py::arg("b"));
  m.def(
      "compose",
      [](std::vector<RingConfig> items, const std::string& method, std::vector<cplx> link_phases) {
        return compose(std::move(items), parse_method(method), std::move(link_phases));
      },
      py::arg("items"), py::arg("method") = "closed", py::arg("link_phases") = std::vector<cplx>{});
  m.def(
      "target_library", [](const std::string& name) { return target_library(name); }, py::arg("name"));
  m.def(
      "scan_grid",
      [](double gamma, std::pair<double, double> ka, std::pair<double, double> x, std::size_t n_ka, std::size_t n_x,
         unsigned workers) {
        py::gil_scoped_release release;
        return scan_grid(gamma, to_range(ka), to_range(x), n_ka, n_x, workers);
      },
      py::arg("gamma"), py::arg("ka"), py::arg("x"), py::arg("n_ka"), py::arg("n_x"), py::arg("workers") = 0);
  m.def(
      "delta_zero_curves",
      [](double gamma, std::pair<double, double> ka, std::pair<double, double> x, std::size_t ka_samples,
         std::size_t x_samples, unsigned workers) {
        CurveOptions opt;
        opt.ka_samples = ka_samples;
        opt.x_samples = x_samples;
        opt.workers = workers;
        py::gil_scoped_release release;
        return delta_zero_curves(gamma, to_range(ka), to_range(x), opt);
      },
      py::arg("gamma"), py::arg("ka"), py::arg("x"), py::arg("ka_samples") = CurveOptions{}.ka_samples,
      py::arg("x_samples") = CurveOptions{}.x_samples, py::arg("workers") = 0);
  m.def("lossless_points", &lossless_points, py::arg("curve"));
  m.def(
      "lossless_points_diametric",
      [](double x, std::pair<double, double> ka, std::size_t samples) {
        return lossless_points_diametric(x, to_range(ka), samples);
      },
      py::arg("x"), py::arg("ka"), py::arg("samples") = 3001);
  m.def(
      "to_dimensionless",
      [](double radius_m, double mass_ratio, double energy_eV, double alpha_eVm) {
        const auto d = units::to_dimensionless({radius_m, mass_ratio, alpha_eVm, energy_eV});
        return py::make_tuple(d.ka, d.x);
      },
      py::arg("radius_m"), py::arg("mass_ratio"), py::arg("energy_eV"), py::arg("alpha_eVm") = 0.0);
  m.def("alpha_for_theta", &units::alpha_for_theta, py::arg("theta"), py::arg("radius_m"), py::arg("mass_ratio"));
  m.def("energy_for_ka", &units::energy_for_ka, py::arg("ka"), py::arg("radius_m"), py::arg("mass_ratio"));
}
