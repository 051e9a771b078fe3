#pragma once

#include <pybind11/pybind11.h>

#include "crofton/serialize.hpp"

namespace pycrofton {

namespace py = pybind11;

// nlohmann JSON -> plain Python objects.
inline py::object to_python(const crofton::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

void bind_exact(py::module_& m);
void bind_geometry(py::module_& m);
void bind_crofton(py::module_& m);

}  // namespace pycrofton
