#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "bindings.hpp"
#include "crofton/exact.hpp"

namespace pycrofton {

using namespace crofton;

void bind_exact(py::module_& m) {
  py::class_<ExactScalar>(m, "ExactScalar", "rational * pi^(m/2)")
      .def_property_readonly("rational", [](const ExactScalar& s) { return s.coeff().get_str(); })
      .def_property_readonly("pi_half_exponent", &ExactScalar::pi_half_exponent)
      .def("__float__", &ExactScalar::to_double)
      .def("__str__", &ExactScalar::to_string)
      .def("__repr__", [](const ExactScalar& s) { return "ExactScalar('" + s.to_string() + "')"; })
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self);

  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("lhs", &IdentityCheck::lhs)
      .def_readonly("rhs", &IdentityCheck::rhs)
      .def("holds", &IdentityCheck::holds);

  m.def("gamma", [](int two_a) { return gamma(half(two_a)); }, py::arg("two_a"),
        "Gamma(two_a / 2) exactly; raises at poles");
  m.def("reciprocal_gamma", [](int two_a) { return reciprocal_gamma(half(two_a)); }, py::arg("two_a"));
  m.def("rising_factorial", [](int two_a, int q) { return rising_factorial(half(two_a), q); }, py::arg("two_a"),
        py::arg("q"));
  m.def("omega", &omega, py::arg("m"), "surface area of the unit sphere in R^m");
  m.def("kappa_ball", &kappa_ball, py::arg("m"), "volume of the unit ball in R^m");
  m.def("lemma61", [](int q, int a, int b) { return lemma61(q, half(a), half(b)); }, py::arg("q"),
        py::arg("two_a"), py::arg("two_b"));
  m.def("lemma62", &lemma62, py::arg("a"));
  m.def("lemma63", [](int a, int b, int c, int z) { return lemma63(half(a), half(b), half(c), z); },
        py::arg("two_a"), py::arg("two_b"), py::arg("two_c"), py::arg("z"));
  m.def("lemma64", [](int a, int b, int t) { return lemma64(half(a), half(b), t); }, py::arg("two_a"),
        py::arg("two_b"), py::arg("t"));
}

}  // namespace pycrofton
