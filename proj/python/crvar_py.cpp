#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crvar/app.hpp"
#include "crvar/oracle3.hpp"
#include "crvar/spectral.hpp"
#include "crvar/variation.hpp"

namespace py = pybind11;
using namespace crvar;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(rational_to_string(r));
}

SpherePoly parse_sphere(int n, const std::string& text) { return normal_form(parse_poly(n, text)); }

py::dict hessian_dict(const HessianReport& r) {
  py::list modes;
  for (const auto& t : r.modes) modes.append(py::make_tuple(t.m, fraction(t.norm2), fraction(t.weighted)));
  py::dict d;
  d["dimension"] = r.dimension;
  d["modes"] = modes;
  d["norm2"] = fraction(r.norm2);
  d["total"] = fraction(r.total);
  d["embeddable"] = r.embeddable;
  d["embeddable_by_dimension"] = r.embeddable_by_dimension;
  d["negative_modes"] = r.negative_modes;
  return d;
}

template <typename T>
py::list series_list(const TruncatedSeries<T, 2>& s) {
  py::list out;
  for (const auto& c : s.coefficients()) out.append(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact pseudohermitian calculus on odd spheres";
  m.attr("__version__") = app::kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<app::SymmetryError>(m, "SymmetryError", PyExc_ValueError);
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<ExactScalar>(m, "Scalar")
      .def(py::init([](const std::string& text) { return ExactScalar::parse(text); }), py::arg("text"))
      .def_property_readonly("re", [](const ExactScalar& s) { return fraction(s.re()); })
      .def_property_readonly("im", [](const ExactScalar& s) { return fraction(s.im()); })
      .def("is_zero", &ExactScalar::is_zero)
      .def("is_real", &ExactScalar::is_real)
      .def("__complex__", &ExactScalar::to_complex)
      .def("__str__", &ExactScalar::to_string)
      .def("__repr__", [](const ExactScalar& s) { return "Scalar('" + s.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const ExactScalar& s) { return py::hash(py::str(s.to_string())); });

  py::class_<SpherePoly>(m, "SpherePoly")
      .def(py::init(&parse_sphere), py::arg("n"), py::arg("text"))
      .def_property_readonly("dimension", &SpherePoly::dimension)
      .def("is_zero", &SpherePoly::is_zero)
      .def("is_real", &SpherePoly::is_real)
      .def("conjugate", [](const SpherePoly& p) { return conjugate(p); })
      .def("__add__", [](const SpherePoly& a, const SpherePoly& b) { return a + b; })
      .def("__sub__", [](const SpherePoly& a, const SpherePoly& b) { return a - b; })
      .def("__mul__", [](const SpherePoly& a, const SpherePoly& b) { return a * b; })
      .def("__neg__", [](const SpherePoly& a) { return -a; })
      .def(py::self == py::self)
      .def("__str__", &SpherePoly::to_string)
      .def("__repr__", [](const SpherePoly& p) {
        return "SpherePoly(" + std::to_string(p.dimension()) + ", '" + p.to_string() + "')";
      });

  m.def("integrate", [](const SpherePoly& p) { return integrate_sphere(p); },
        "Integral against the probability measure");
  m.def("l2_norm_squared", [](const SpherePoly& p) { return fraction(l2_norm_squared(p)); });
  m.def("fourier_components", &fourier_components);
  m.def("harmonic_decompose", [](const SpherePoly& p) { return harmonic_decompose(p).components; });
  m.def("eigenvalue", [](int p, int q, int n) { return fraction(eigenvalue(p, q, n)); }, py::arg("p"),
        py::arg("q"), py::arg("n"));
  m.def("sublaplacian", &sublaplacian);
  m.def("dirichlet_energy", [](const SpherePoly& p) { return fraction(dirichlet_energy(p)); });

  py::class_<DeformationTensor>(m, "DeformationTensor")
      .def_static("s3", &DeformationTensor::s3, py::arg("e"))
      .def_static("parse", &app::parse_deformation, py::arg("text"), "Deformation file text")
      .def_property_readonly("dimension", &DeformationTensor::dimension)
      .def("norm2", [](const DeformationTensor& e) { return fraction(e.norm2()); })
      .def("is_zero", &DeformationTensor::is_zero);

  m.def("j_hessian", [](const DeformationTensor& e) { return hessian_dict(j_hessian(e)); });
  m.def("j_hessian_via_T", &j_hessian_via_T);
  m.def("is_embeddable", &is_embeddable);
  m.def("validate_symmetry", &validate_symmetry);
  m.def("conformal_hessian", [](const SpherePoly& v) { return fraction(conformal_hessian(v)); });
  m.def("yamabe_energy_series", [](const SpherePoly& v) { return series_list(yamabe_energy_series(v)); });
  m.def("cr_yamabe_constant", [](int n) { return fraction(cr_yamabe_constant(n)); });
  m.def("round_webster_curvature", [](int n) { return fraction(round_webster_curvature(n)); });

  m.def("oracle_s3", [](const SpherePoly& e) {
    oracle3::OracleRun r = oracle3::run(e);
    py::dict checks;
    for (const auto& v : {oracle3::check_solver(r), oracle3::check_torsion_variation(r),
                          oracle3::check_connection_variation(r), oracle3::check_first_variation(r)})
      checks[py::str(v.name)] = v.pass;
    py::dict d;
    d["webster"] = series_list(r.webster);
    d["torsion"] = series_list(r.structure.torsion);
    d["integrated_webster"] = series_list(r.integrated_webster);
    d["second_derivative"] = fraction(oracle3::second_derivative(r));
    d["checks"] = checks;
    return d;
  });
  m.def("hessian_constant", [] { return fraction(oracle3::hessian_constant()); });

  m.def("_run_suite", [](int n, int degree, std::vector<std::string> suites, long samples, std::uint64_t seed) {
    app::SuiteConfig cfg;
    cfg.dimension = n;
    cfg.degree = degree;
    cfg.suites = std::move(suites);
    cfg.samples = samples;
    cfg.seed = seed;
    py::gil_scoped_release release;
    return app::run_suite(cfg).dump();
  });
  m.def("_analyze", [](const DeformationTensor& e, bool oracle) { return app::analyze_deformation(e, {oracle}).dump(); });
  m.def("_spectrum", [](int n, int degree) { return app::spectrum(n, degree).dump(); });
  m.def("_conventions", [](int n) { return app::conventions(n).dump(); });
}
