#include <pybind11/stl.h>

#include "bindings.hpp"
#include "crofton/grassmann.hpp"
#include "crofton/suites.hpp"

namespace pycrofton {

using namespace crofton;

void bind_crofton(py::module_& m) {
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("formulas", [] {
    std::vector<std::string> out;
    for (Formula f : all_formulas()) out.push_back(to_string(f));
    return out;
  });

  m.def(
      "coefficients",
      [](const std::string& formula, int n, int k, int j, int s, int i, int r) {
        return to_python(table_to_json(coefficient_table(parse_formula(formula), {n, k, j, s, i, r})));
      },
      py::arg("formula"), py::arg("n") = 3, py::arg("k") = 1, py::arg("j") = 0, py::arg("s") = 0, py::arg("i") = 0,
      py::arg("r") = 0, "exact coefficient table as a dict");

  m.def(
      "coefficients_csv",
      [](const std::string& formula, int n, int k, int j, int s, int i, int r) {
        return table_to_csv(coefficient_table(parse_formula(formula), {n, k, j, s, i, r}));
      },
      py::arg("formula"), py::arg("n") = 3, py::arg("k") = 1, py::arg("j") = 0, py::arg("s") = 0, py::arg("i") = 0,
      py::arg("r") = 0);

  m.def(
      "verify",
      [](const std::string& formula, const Polytope& body, int k, int j, int s, int i, int r,
         const std::optional<std::pair<std::vector<double>, std::vector<double>>>& box, std::size_t samples,
         std::uint64_t seed, int workers, double threshold) {
        std::optional<Box> b;
        if (box) {
          b = Box::everything(body.dim());
          for (int d = 0; d < body.dim(); ++d) {
            b->lo[d] = box->first.at(d);
            b->hi[d] = box->second.at(d);
          }
        }
        CroftonQuery q;
        q.formula = parse_formula(formula);
        q.params = {body.dim(), k, j, s, i, r};
        q.box = b ? &*b : nullptr;
        MCSettings mc{samples, seed, workers, threshold};
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = verify(body, q, mc);
        }
        return to_python(verification_to_json(rep));
      },
      py::arg("formula"), py::arg("body"), py::arg("k") = 1, py::arg("j") = 0, py::arg("s") = 0, py::arg("i") = 0,
      py::arg("r") = 0, py::arg("box") = py::none(), py::arg("samples") = 100000, py::arg("seed") = 1,
      py::arg("workers") = 1, py::arg("threshold") = 4.0, "Monte Carlo check; returns the report as a dict");

  m.def("generalized_sine", &generalized_sine, py::arg("f_basis"), py::arg("l_basis"));

  m.def(
      "identities",
      [](const std::string& suite) {
        py::list out;
        for (const auto& r : run_suite(suite)) {
          py::dict d;
          d["name"] = r.name;
          d["checks"] = r.checks;
          d["failures"] = r.failures;
          d["pass"] = r.pass();
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "gamma");
}

}  // namespace pycrofton
