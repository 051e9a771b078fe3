#include <pybind11/eigen.h>
#include <pybind11/stl.h>

#include "bindings.hpp"
#include "crofton/measures.hpp"

namespace pycrofton {

using namespace crofton;

namespace {

std::optional<Box> make_box(const std::optional<std::pair<std::vector<double>, std::vector<double>>>& b, int n) {
  if (!b) return std::nullopt;
  if (static_cast<int>(b->first.size()) != n || static_cast<int>(b->second.size()) != n)
    throw std::invalid_argument("box bounds must have the body's dimension");
  Box box = Box::everything(n);
  for (int d = 0; d < n; ++d) {
    box.lo[d] = b->first[d];
    box.hi[d] = b->second[d];
  }
  return box;
}

}  // namespace

void bind_geometry(py::module_& m) {
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ValueError);

  py::class_<TensorF>(m, "Tensor", "symmetric tensor stored as polynomial coefficients")
      .def_property_readonly("dim", &TensorF::dim)
      .def_property_readonly("rank", &TensorF::rank)
      .def("coefficient",
           [](const TensorF& t, const std::vector<int>& alpha) { return t.coeff(std::span<const int>(alpha)); },
           py::arg("alpha"), "coefficient of x^alpha in T(x, ..., x)")
      .def("component", [](const TensorF& t, const std::vector<int>& idx) { return component(t, idx); },
           py::arg("indices"))
      .def("value", [](const TensorF& t) { return t.value(); })
      .def("to_dict", [](const TensorF& t) { return to_python(tensor_to_json(t)); })
      .def("__repr__", [](const TensorF& t) {
        return "Tensor(dim=" + std::to_string(t.dim()) + ", rank=" + std::to_string(t.rank()) + ")";
      });

  py::class_<Polytope>(m, "Polytope")
      .def_static("build",
                  [](const Eigen::MatrixXd& pts) {
                    std::vector<Vec> v;
                    for (int i = 0; i < pts.rows(); ++i) v.push_back(pts.row(i).transpose());
                    return Polytope::build(v);
                  },
                  py::arg("points"), "convex hull of the rows of points")
      .def_static("catalog", &catalog, py::arg("name"), py::arg("n"))
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               Eigen::MatrixXd out(p.vertices().size(), p.dim());
                               for (std::size_t i = 0; i < p.vertices().size(); ++i)
                                 out.row(i) = p.vertices()[i].transpose();
                               return out;
                             })
      .def("face_counts",
           [](const Polytope& p) {
             std::vector<std::size_t> c;
             for (int j = 0; j <= p.dim(); ++j) c.push_back(p.faces(j).size());
             return c;
           })
      .def("contains", [](const Polytope& p, const Vec& x) { return p.contains(x); }, py::arg("x"))
      .def("transformed", &Polytope::transformed, py::arg("rotation"), py::arg("shift"))
      .def(
          "measure",
          [](const Polytope& p, int j, int r, int s, int eps,
             const std::optional<std::pair<std::vector<double>, std::vector<double>>>& box) {
            const auto b = make_box(box, p.dim());
            return phi(p, {p.dim(), j, r, s, eps, MeasureKind::extrinsic}, b ? &*b : nullptr);
          },
          py::arg("j"), py::arg("r") = 0, py::arg("s") = 0, py::arg("eps") = 0, py::arg("box") = py::none(),
          "phi_j^{r,s,eps}(P, box); box is (lows, highs)");
}

}  // namespace pycrofton
