#include "bindings.hpp"

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crofton formulae for tensorial curvature measures of polytopes";
  pycrofton::bind_exact(m);
  pycrofton::bind_geometry(m);
  pycrofton::bind_crofton(m);
}
