#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polyvortex/corotating.hpp"
#include "polyvortex/dynamics.hpp"
#include "polyvortex/errors.hpp"
#include "polyvortex/json_io.hpp"
#include "polyvortex/nested.hpp"
#include "polyvortex/polygon.hpp"
#include "polyvortex/system.hpp"

namespace py = pybind11;
using namespace polyvortex;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relative equilibria of point vortices on concentric regular polygons";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<SingularFieldError>(m, "SingularFieldError", PyExc_ArithmeticError);
  py::register_exception<CloseApproachError>(m, "CloseApproachError", PyExc_ArithmeticError);
  py::register_exception<HypothesisUnmetError>(m, "HypothesisUnmetError", PyExc_ValueError);

  py::enum_<EquilibriumKind>(m, "EquilibriumKind")
      .value("ABSOLUTE", EquilibriumKind::Absolute)
      .value("RIGID_TRANSLATION", EquilibriumKind::RigidTranslation)
      .value("ROTATION", EquilibriumKind::Rotation)
      .value("NONE", EquilibriumKind::None);

  py::enum_<CirculantKind>(m, "CirculantKind")
      .value("C", CirculantKind::C)
      .value("C0", CirculantKind::C0);

  py::enum_<RingCase>(m, "RingCase")
      .value("ROTATING", RingCase::Rotating)
      .value("TRANSLATING", RingCase::Translating);

  py::enum_<Alignment>(m, "Alignment")
      .value("ALIGNED", Alignment::Aligned)
      .value("STAGGERED", Alignment::Staggered);

  py::enum_<RayKind>(m, "RayKind")
      .value("ORIGIN", RayKind::Origin)
      .value("VERTEX_RAY", RayKind::VertexRay)
      .value("MIDPOINT_RAY", RayKind::MidpointRay);

  py::class_<VortexSystem>(m, "VortexSystem")
      .def(py::init<std::vector<PlanePoint>, std::vector<double>>(), py::arg("positions"),
           py::arg("vorticities"))
      .def_property_readonly("positions", &VortexSystem::positions)
      .def_property_readonly("vorticities", &VortexSystem::vorticities)
      .def_property_readonly("min_mutual_distance", &VortexSystem::min_mutual_distance)
      .def("__len__", &VortexSystem::size)
      .def("to_json", &system_to_json_string)
      .def_static("from_json", &system_from_json_string, py::arg("text"));

  py::class_<ConservedQuantities>(m, "ConservedQuantities")
      .def_readonly("total_vorticity", &ConservedQuantities::total_vorticity)
      .def_readonly("center_of_vorticity", &ConservedQuantities::center_of_vorticity)
      .def_readonly("hamiltonian", &ConservedQuantities::hamiltonian)
      .def_readonly("angular_impulse", &ConservedQuantities::angular_impulse);

  py::class_<EquilibriumReport>(m, "EquilibriumReport")
      .def_readonly("kind", &EquilibriumReport::kind)
      .def_readonly("omega", &EquilibriumReport::omega)
      .def_readonly("translation_velocity", &EquilibriumReport::translation_velocity)
      .def_readonly("center", &EquilibriumReport::center)
      .def_readonly("residual", &EquilibriumReport::residual)
      .def("__repr__", [](const EquilibriumReport& r) {
        return std::string("EquilibriumReport(kind=") + to_string(r.kind) +
               ", omega=" + format_double(r.omega) + ")";
      });

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("max_hamiltonian_drift", &Trajectory::max_hamiltonian_drift)
      .def_readonly("max_distance_drift", &Trajectory::max_distance_drift)
      .def("to_csv", [](const Trajectory& tr) {
        std::ostringstream out;
        write_trajectory_csv(tr, out);
        return out.str();
      });

  py::class_<PolygonRing>(m, "PolygonRing")
      .def(py::init([](int n, PlanePoint s, std::vector<double> vorticities) {
             return PolygonRing{n, s, std::move(vorticities)};
           }),
           py::arg("n"), py::arg("s"), py::arg("vorticities"))
      .def_readonly("n", &PolygonRing::n)
      .def_readonly("s", &PolygonRing::s)
      .def_readonly("vorticities", &PolygonRing::vorticities);

  py::class_<CirculantSpectrum>(m, "CirculantSpectrum")
      .def_readonly("n", &CirculantSpectrum::n)
      .def_readonly("kind", &CirculantSpectrum::kind)
      .def_readonly("eigenvalues", &CirculantSpectrum::eigenvalues)
      .def_readonly("eigenvectors", &CirculantSpectrum::eigenvectors)
      .def_readonly("max_residual", &CirculantSpectrum::max_residual)
      .def("to_json", &spectrum_to_json);

  py::class_<VorticitySolutionSpace>(m, "VorticitySolutionSpace")
      .def_readonly("n", &VorticitySolutionSpace::n)
      .def_readonly("ring_case", &VorticitySolutionSpace::ring_case)
      .def_readonly("dimension", &VorticitySolutionSpace::dimension)
      .def_readonly("basis", &VorticitySolutionSpace::basis);

  py::class_<PolynomialInstance>(m, "PolynomialInstance")
      .def(py::init([](double alpha, double beta, double gamma, int n) {
             return PolynomialInstance{alpha, beta, gamma, n};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("n"))
      .def_readonly("alpha", &PolynomialInstance::alpha)
      .def_readonly("beta", &PolynomialInstance::beta)
      .def_readonly("gamma", &PolynomialInstance::gamma)
      .def_readonly("n", &PolynomialInstance::n);

  py::class_<AnalyticCount>(m, "AnalyticCount")
      .def_readonly("lo", &AnalyticCount::lo)
      .def_readonly("hi", &AnalyticCount::hi)
      .def_readonly("boundary", &AnalyticCount::boundary)
      .def("exact", &AnalyticCount::exact);

  py::class_<CountRange>(m, "CountRange")
      .def_readonly("lo", &CountRange::lo)
      .def_readonly("hi", &CountRange::hi)
      .def("exact", &CountRange::exact)
      .def("contains", &CountRange::contains);

  py::class_<RegimeClassification>(m, "RegimeClassification")
      .def_readonly("n", &RegimeClassification::n)
      .def_readonly("gamma_ratio", &RegimeClassification::gamma_ratio)
      .def_readonly("aligned", &RegimeClassification::aligned)
      .def_readonly("staggered", &RegimeClassification::staggered)
      .def_readonly("mu_n", &RegimeClassification::mu_n)
      .def_readonly("lambda_n", &RegimeClassification::lambda_n)
      .def_readonly("regime", &RegimeClassification::regime);

  py::class_<NestedSolution>(m, "NestedSolution")
      .def_readonly("alignment", &NestedSolution::alignment)
      .def_readonly("x", &NestedSolution::x)
      .def_readonly("system", &NestedSolution::system)
      .def_readonly("report", &NestedSolution::report)
      .def_readonly("boundary_warning", &NestedSolution::boundary_warning);

  py::class_<NestedPolygonConfig>(m, "NestedPolygonConfig")
      .def(py::init([](int n, PlanePoint s1, PlanePoint s2, double gamma1, double gamma2) {
             return NestedPolygonConfig{n, s1, s2, gamma1, gamma2};
           }),
           py::arg("n"), py::arg("s1"), py::arg("s2"), py::arg("gamma1"), py::arg("gamma2"))
      .def_readonly("n", &NestedPolygonConfig::n)
      .def_readonly("s1", &NestedPolygonConfig::s1)
      .def_readonly("s2", &NestedPolygonConfig::s2)
      .def_readonly("gamma1", &NestedPolygonConfig::gamma1)
      .def_readonly("gamma2", &NestedPolygonConfig::gamma2);

  py::class_<AbsoluteEquilibriumResult>(m, "AbsoluteEquilibriumResult")
      .def_readonly("gamma2", &AbsoluteEquilibriumResult::gamma2)
      .def_readonly("s2_over_s1", &AbsoluteEquilibriumResult::s2_over_s1)
      .def_readonly("system", &AbsoluteEquilibriumResult::system);

  py::class_<RegimeScanRow>(m, "RegimeScanRow")
      .def_readonly("prediction", &RegimeScanRow::prediction)
      .def_readonly("aligned_numeric", &RegimeScanRow::aligned_numeric)
      .def_readonly("staggered_numeric", &RegimeScanRow::staggered_numeric)
      .def_readonly("consistent", &RegimeScanRow::consistent);

  py::class_<CorotatingPoint>(m, "CorotatingPoint")
      .def_readonly("ray", &CorotatingPoint::ray)
      .def_readonly("k", &CorotatingPoint::k)
      .def_readonly("radius", &CorotatingPoint::radius)
      .def_readonly("position", &CorotatingPoint::position)
      .def_readonly("residual", &CorotatingPoint::residual);

  // core
  m.def("mutual_distances", &mutual_distances, py::arg("system"));
  m.def("conserved", &conserved, py::arg("system"));

  // dynamics
  m.def("velocities", &velocities, py::arg("system"));
  m.def("classify", &classify, py::arg("system"), py::arg("tol") = 1e-9);
  m.def("integrate", &integrate, py::arg("system"), py::arg("t_end"), py::arg("rel_tol"));
  m.def("oneil_sum", &oneil_sum, py::arg("system"));

  // polygon
  m.def("ring_to_system", &ring_to_system, py::arg("ring"));
  m.def("polygon_omega", &polygon_omega, py::arg("n"), py::arg("s"),
        py::arg("total_vorticity"));
  m.def("polygon_field", &polygon_field, py::arg("n"), py::arg("s"), py::arg("gamma"),
        py::arg("z"));
  m.def("circulant_spectrum", &circulant_spectrum, py::arg("n"), py::arg("kind"));
  m.def("vorticity_solution_space", &vorticity_solution_space, py::arg("n"),
        py::arg("ring_case"));

  // nested
  m.def("mu", &mu, py::arg("n"));
  m.def("lambda_n", &lambda_n, py::arg("n"));
  m.def("equation_coefficients", &equation_coefficients, py::arg("n"),
        py::arg("gamma_ratio"), py::arg("alignment"));
  m.def("g_eval", &g_eval, py::arg("p"), py::arg("x"));
  m.def("f_eval", &f_eval, py::arg("p"), py::arg("t"));
  m.def("positive_roots", &positive_roots, py::arg("p"));
  m.def("count_roots_analytic", &count_roots_analytic, py::arg("p"));
  m.def("classify_regime", &classify_regime, py::arg("n"), py::arg("gamma_ratio"));
  m.def("solve_nested", &solve_nested, py::arg("n"), py::arg("gamma1"), py::arg("gamma2"),
        py::arg("s1") = PlanePoint(1.0, 0.0), py::arg("tol") = 1e-9);
  m.def("absolute_equilibrium", &absolute_equilibrium, py::arg("n"), py::arg("gamma1"),
        py::arg("s1") = PlanePoint(1.0, 0.0));
  m.def("scan_regimes", &scan_regimes, py::arg("n"), py::arg("ratios"));

  // corotating
  m.def("corotating_single", &corotating_single, py::arg("n"), py::arg("s"),
        py::arg("gamma"));
  m.def("corotating_nested", &corotating_nested, py::arg("config"), py::arg("alignment"),
        py::arg("x"));
  m.def("corotating_absolute", &corotating_absolute, py::arg("n"), py::arg("gamma1"));
  m.def("corotating_to_json", &corotating_to_json, py::arg("generator"), py::arg("points"));

  m.attr("__version__") = "0.1.0";
}
