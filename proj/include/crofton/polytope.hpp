#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crofton/symtensor.hpp"

namespace crofton {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Face {
  int dim = 0;
  std::vector<int> vertex_ids;  // sorted
  Vec origin;                   // first vertex
  Mat basis;                    // n x dim, orthonormal, spans the direction space
  std::vector<int> facet_ids;   // facets containing the face
};

struct NormalCone {
  int face_dim = 0;
  std::vector<Vec> generators;  // outward unit normals of the facets containing the face
  Mat subspace_basis;           // n x (n - face_dim), ONB of the orthogonal complement of the face
  std::vector<Vec> halfspaces;  // the cone is {u in span : u.h <= 0 for all h}
};

// Axis-aligned box; infinite bounds are allowed.
struct Box {
  Vec lo, hi;
  static Box everything(int n);
  bool contains(const Vec& x, double tol = 0.0) const;
};

// x = origin + basis * y, basis with orthonormal columns.
struct Embedding {
  Vec origin;
  Mat basis;
  Vec apply(const Vec& y) const { return origin + basis * y; }
};

struct BuildOptions {
  std::size_t vertex_cap = 64;
  double tol = 1e-9;
};

class Polytope {
 public:
  // Convex hull of the points; throws DegenerateError if not full-dimensional.
  static Polytope build(const std::vector<Vec>& points, const BuildOptions& opts = {});
  // Vertices with known supporting hyperplanes normal.x <= offset (one per facet).
  static Polytope from_facets(const std::vector<Vec>& vertices, const std::vector<Vec>& normals,
                              const std::vector<double>& offsets);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Face>& faces(int j) const { return faces_.at(j); }
  const std::vector<Vec>& facet_normals() const { return normals_; }
  const std::vector<double>& facet_offsets() const { return offsets_; }

  bool contains(const Vec& x, double tol = 1e-9) const;
  Vec vertex_centroid() const;
  double circumradius(const Vec& center) const;
  // Faces of dimension d contained in f.
  std::vector<int> subfaces(const Face& f, int d) const;
  Polytope transformed(const Mat& rotation, const Vec& shift) const;

 private:
  struct FacetData {
    std::vector<int> ids;
    Vec normal;
    double offset;
  };
  static Polytope assemble(std::vector<Vec> vertices, std::vector<FacetData> facets);

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<std::vector<Face>> faces_;  // faces_[j] for j = 0..n
  std::vector<Vec> normals_;
  std::vector<double> offsets_;
};

// Pulling triangulation of a face into simplices given by vertex ids.
std::vector<std::vector<int>> triangulate(const Polytope& p, const Face& f);
// H^j measure and moment integral of x^r over the simplex with the given vertices.
double simplex_volume(const std::vector<Vec>& verts);
TensorF simplex_moment(const std::vector<Vec>& verts, int r);

double face_volume(const Polytope& p, const Face& f);
// Integral of x^r over f (clipped to box if given), coordinates mapped through emb if given.
TensorF face_moment_tensor(const Polytope& p, const Face& f, int r, const Box* box = nullptr,
                           const Embedding* emb = nullptr);
NormalCone normal_cone(const Polytope& p, const Face& f);

struct FlatFrame {
  int n = 0, k = 0;
  Mat basis;        // n x k orthonormal columns
  Vec translation;  // point in the orthogonal complement
};

struct SliceResult {
  enum class Status { ok, empty, degenerate };
  Status status = Status::empty;
  std::optional<Polytope> body;  // in flat coordinates (dimension k)
  Embedding embedding;
};

SliceResult slice(const Polytope& p, const FlatFrame& frame);

// cube: [0,1]^n; simplex: conv{0, e_1..e_n}; crosspolytope: conv{+-e_i}.
Polytope catalog(const std::string& name, int n);

}  // namespace crofton
