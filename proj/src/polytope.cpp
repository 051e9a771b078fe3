#include "crofton/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace crofton {

namespace {

double coord_scale(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

// Columns of the result: ONB of span(cols); rank decided with the given tolerance.
Mat orthonormal_span(const Mat& cols, double tol) {
  if (cols.cols() == 0) return Mat(cols.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeThinU);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

Mat differences(const std::vector<Vec>& pts, const std::vector<int>& ids) {
  const Eigen::Index n = pts[ids[0]].size();
  Mat d(n, static_cast<Eigen::Index>(ids.size()) - 1);
  for (std::size_t i = 1; i < ids.size(); ++i) d.col(i - 1) = pts[ids[i]] - pts[ids[0]];
  return d;
}

// Basis of the orthogonal complement of span(cols) in R^n.
Mat orthogonal_complement(const Mat& basis, int n) {
  if (basis.cols() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(basis, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(n - basis.cols());
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vec> canonicalize_points(const std::vector<Vec>& pts, double merge_tol) {
  std::vector<Vec> out;
  for (Vec p : pts) {
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = std::round(p[i] * 1e12) / 1e12;
    bool dup = false;
    for (const auto& q : out)
      if ((p - q).cwiseAbs().maxCoeff() <= merge_tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

Box Box::everything(int n) {
  const double inf = std::numeric_limits<double>::infinity();
  return {Vec::Constant(n, -inf), Vec::Constant(n, inf)};
}

bool Box::contains(const Vec& x, double tol) const {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  return true;
}

Polytope Polytope::build(const std::vector<Vec>& input, const BuildOptions& opts) {
  if (input.empty()) throw DegenerateError("build: no points");
  const int n = static_cast<int>(input[0].size());
  for (const auto& p : input)
    if (p.size() != n) throw std::invalid_argument("build: points of mixed dimension");
  const double tol = opts.tol * coord_scale(input);
  std::vector<Vec> pts = canonicalize_points(input, tol);
  if (pts.size() > opts.vertex_cap) throw std::length_error("build: vertex cap exceeded");
  if (static_cast<int>(pts.size()) < n + 1) throw DegenerateError("build: too few points");
  std::vector<int> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  if (orthonormal_span(differences(pts, all), tol).cols() < n)
    throw DegenerateError("build: points are not full-dimensional");

  std::vector<FacetData> facets;

  if (n == 1) {
    auto [mn, mx] = std::minmax_element(pts.begin(), pts.end(),
                                        [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
    const int imn = static_cast<int>(mn - pts.begin()), imx = static_cast<int>(mx - pts.begin());
    return assemble({pts[imn], pts[imx]}, {{{0}, Vec::Constant(1, -1.0), -(*mn)[0]},
                                          {{1}, Vec::Constant(1, 1.0), (*mx)[0]}});
  }

  const int m = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    bool covered = false;
    for (const auto& f : facets)
      if (is_subset(idx, f.ids)) {
        covered = true;
        break;
      }
    if (!covered) {
      Mat d = differences(pts, idx).transpose();  // (n-1) x n
      Eigen::JacobiSVD<Mat> svd(d, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      if (sv.size() == n - 1 && sv[n - 2] > tol) {
        Vec normal = svd.matrixV().col(n - 1);
        const double off = normal.dot(pts[idx[0]]);
        double lo = 0.0, hi = 0.0;
        for (const auto& p : pts) {
          const double v = normal.dot(p) - off;
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        if (hi <= tol || lo >= -tol) {
          if (hi > tol) normal = -normal;
          const double offset = normal.dot(pts[idx[0]]);
          std::vector<int> on;
          for (int i = 0; i < m; ++i)
            if (std::abs(normal.dot(pts[i]) - offset) <= tol) on.push_back(i);
          facets.push_back({on, normal, offset});
        }
      }
    }
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == m - n + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
  }

  // Keep only extreme points: those cut out by the facets containing them.
  std::vector<int> extreme;
  for (int i = 0; i < m; ++i) {
    std::vector<int> common;
    bool first = true;
    for (const auto& f : facets) {
      if (!std::binary_search(f.ids.begin(), f.ids.end(), i)) continue;
      common = first ? f.ids : intersect(common, f.ids);
      first = false;
    }
    if (!first && common.size() == 1) extreme.push_back(i);
  }
  if (static_cast<int>(extreme.size()) == m) return assemble(std::move(pts), std::move(facets));
  std::vector<Vec> kept;
  std::vector<int> remap(m, -1);
  for (int i : extreme) {
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(pts[i]);
  }
  for (auto& f : facets) {
    std::vector<int> ids;
    for (int i : f.ids)
      if (remap[i] >= 0) ids.push_back(remap[i]);
    f.ids = std::move(ids);
  }
  return assemble(std::move(kept), std::move(facets));
}

Polytope Polytope::from_facets(const std::vector<Vec>& vertices, const std::vector<Vec>& normals,
                               const std::vector<double>& offsets) {
  const double tol = 1e-9 * coord_scale(vertices);
  std::vector<FacetData> facets;
  for (std::size_t f = 0; f < normals.size(); ++f) {
    Vec nrm = normals[f].normalized();
    const double off = offsets[f] / normals[f].norm();
    std::vector<int> on;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const double v = nrm.dot(vertices[i]) - off;
      if (v > tol) throw std::invalid_argument("from_facets: vertex violates a facet inequality");
      if (v >= -tol) on.push_back(static_cast<int>(i));
    }
    facets.push_back({on, nrm, off});
  }
  return assemble(vertices, std::move(facets));
}

Polytope Polytope::assemble(std::vector<Vec> vertices, std::vector<FacetData> facets) {
  Polytope p;
  p.dim_ = static_cast<int>(vertices[0].size());
  p.vertices_ = std::move(vertices);
  const int n = p.dim_;
  const double tol = 1e-9 * coord_scale(p.vertices_);

  std::sort(facets.begin(), facets.end(), [](const FacetData& a, const FacetData& b) { return a.ids < b.ids; });
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (const auto& f : facets) {
    seen.insert(f.ids);
    frontier.push_back(f.ids);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& f : facets) {
        auto c = intersect(a, f.ids);
        if (!c.empty() && seen.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }

  p.faces_.assign(n + 1, {});
  std::vector<int> all(p.vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  seen.insert(all);
  for (const auto& ids : seen) {
    Face face;
    face.vertex_ids = ids;
    face.origin = p.vertices_[ids[0]];
    face.basis = orthonormal_span(differences(p.vertices_, ids), tol);
    face.dim = static_cast<int>(face.basis.cols());
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (face.dim < n && is_subset(ids, facets[f].ids)) face.facet_ids.push_back(static_cast<int>(f));
    p.faces_[face.dim].push_back(std::move(face));
  }
  for (const auto& f : facets) {
    p.normals_.push_back(f.normal);
    p.offsets_.push_back(f.offset);
  }
  return p;
}

bool Polytope::contains(const Vec& x, double tol) const {
  for (std::size_t f = 0; f < normals_.size(); ++f)
    if (normals_[f].dot(x) - offsets_[f] > tol) return false;
  return true;
}

Vec Polytope::vertex_centroid() const {
  Vec c = Vec::Zero(dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double Polytope::circumradius(const Vec& center) const {
  double r = 0.0;
  for (const auto& v : vertices_) r = std::max(r, (v - center).norm());
  return r;
}

std::vector<int> Polytope::subfaces(const Face& f, int d) const {
  std::vector<int> out;
  const auto& list = faces_.at(d);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (is_subset(list[i].vertex_ids, f.vertex_ids)) out.push_back(static_cast<int>(i));
  return out;
}

Polytope Polytope::transformed(const Mat& rotation, const Vec& shift) const {
  std::vector<Vec> pts;
  for (const auto& v : vertices_) pts.push_back(rotation * v + shift);
  return build(pts, {std::max<std::size_t>(64, pts.size()), 1e-9});
}

std::vector<std::vector<int>> triangulate(const Polytope& p, const Face& f) {
  if (f.dim == 0) return {{f.vertex_ids[0]}};
  const int v0 = f.vertex_ids[0];
  std::vector<std::vector<int>> out;
  for (int g : p.subfaces(f, f.dim - 1)) {
    const Face& sub = p.faces(f.dim - 1)[g];
    if (std::binary_search(sub.vertex_ids.begin(), sub.vertex_ids.end(), v0)) continue;
    for (auto s : triangulate(p, sub)) {
      s.insert(s.begin(), v0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

double simplex_volume(const std::vector<Vec>& verts) {
  const int j = static_cast<int>(verts.size()) - 1;
  if (j == 0) return 1.0;
  Mat e(verts[0].size(), j);
  for (int i = 0; i < j; ++i) e.col(i) = verts[i + 1] - verts[0];
  const double det = (e.transpose() * e).determinant();
  double fact = 1.0;
  for (int i = 2; i <= j; ++i) fact *= i;
  return std::sqrt(std::max(det, 0.0)) / fact;
}

TensorF simplex_moment(const std::vector<Vec>& verts, int r) {
  const int n = static_cast<int>(verts[0].size());
  const int j = static_cast<int>(verts.size()) - 1;
  const double vol = simplex_volume(verts);
  if (r == 0) return TensorF::scalar(n, vol);
  // h[a] = complete homogeneous symmetric "polynomial" of degree a in the vertices.
  std::vector<TensorF> h;
  for (int a = 0; a <= r; ++a) h.push_back(vec_pow(verts[0], a));
  for (int m = 1; m <= j; ++m) {
    std::vector<TensorF> pw;
    for (int b = 0; b <= r; ++b) pw.push_back(vec_pow(verts[m], b));
    std::vector<TensorF> next;
    for (int a = 0; a <= r; ++a) {
      TensorF acc(n, a);
      for (int b = 0; b <= a; ++b) acc += sym_mul(pw[b], h[a - b]);
      next.push_back(std::move(acc));
    }
    h = std::move(next);
  }
  double c = vol;  // vol * j! r! / (j + r)!
  for (int i = 1; i <= r; ++i) c *= static_cast<double>(i) / (j + i);
  return h[r] * c;
}

double face_volume(const Polytope& p, const Face& f) {
  if (f.dim == 0) return 1.0;
  double v = 0.0;
  for (const auto& s : triangulate(p, f)) {
    std::vector<Vec> verts;
    for (int id : s) verts.push_back(p.vertices()[id]);
    v += simplex_volume(verts);
  }
  return v;
}

namespace {

// Clip conv(points) by {y : a.y <= b}.
std::vector<Vec> clip_points(const std::vector<Vec>& pts, const Vec& a, double b, double tol) {
  std::vector<Vec> in, out;
  std::vector<double> vin, vout;
  for (const auto& p : pts) {
    const double v = a.dot(p) - b;
    if (v <= tol) {
      in.push_back(p);
      vin.push_back(v);
    } else {
      out.push_back(p);
      vout.push_back(v);
    }
  }
  std::vector<Vec> res = in;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (vin[i] >= -tol) continue;  // already on the boundary
    for (std::size_t o = 0; o < out.size(); ++o) {
      const double t = vin[i] / (vin[i] - vout[o]);
      res.push_back(in[i] + t * (out[o] - in[i]));
    }
  }
  return res;
}

}  // namespace

TensorF face_moment_tensor(const Polytope& p, const Face& f, int r, const Box* box, const Embedding* emb) {
  auto to_final = [&](const Vec& x) -> Vec { return emb ? emb->apply(x) : x; };
  const int out_dim = emb ? static_cast<int>(emb->origin.size()) : p.dim();
  TensorF total(out_dim, r);

  bool inside = true;
  if (box)
    for (int id : f.vertex_ids) inside = inside && box->contains(to_final(p.vertices()[id]));
  if (inside) {
    for (const auto& s : triangulate(p, f)) {
      std::vector<Vec> verts;
      for (int id : s) verts.push_back(to_final(p.vertices()[id]));
      total += simplex_moment(verts, r);
    }
    return total;
  }

  // Work in face coordinates: x = x0 + A y.
  const Vec x0 = to_final(f.origin);
  const Mat a = emb ? Mat(emb->basis * f.basis) : f.basis;
  if (f.dim == 0) return box->contains(x0) ? vec_pow(x0, r) : total;
  std::vector<Vec> ys;
  for (int id : f.vertex_ids) ys.push_back(f.basis.transpose() * (p.vertices()[id] - f.origin));
  const double tol = 1e-12;
  for (int d = 0; d < out_dim && !ys.empty(); ++d) {
    if (std::isfinite(box->hi[d])) ys = clip_points(ys, a.row(d).transpose(), box->hi[d] - x0[d], tol);
    if (std::isfinite(box->lo[d]) && !ys.empty())
      ys = clip_points(ys, -a.row(d).transpose(), x0[d] - box->lo[d], tol);
  }
  if (static_cast<int>(ys.size()) < f.dim + 1) return total;
  try {
    Polytope clipped = Polytope::build(ys, {1u << 20, 1e-9});
    const Face& whole = clipped.faces(f.dim)[0];
    for (const auto& s : triangulate(clipped, whole)) {
      std::vector<Vec> verts;
      for (int id : s) verts.push_back(x0 + a * clipped.vertices()[id]);
      total += simplex_moment(verts, r);
    }
  } catch (const DegenerateError&) {
    // lower-dimensional remainder: measure zero
  }
  return total;
}

NormalCone normal_cone(const Polytope& p, const Face& f) {
  const int n = p.dim();
  if (f.dim >= n) throw std::invalid_argument("normal_cone: the full polytope has no normal cone");
  NormalCone c;
  c.face_dim = f.dim;
  for (int id : f.facet_ids) c.generators.push_back(p.facet_normals()[id]);
  c.subspace_basis = orthogonal_complement(f.basis, n);
  Vec center = Vec::Zero(n);
  for (int id : f.vertex_ids) center += p.vertices()[id];
  center /= static_cast<double>(f.vertex_ids.size());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (std::binary_search(f.vertex_ids.begin(), f.vertex_ids.end(), static_cast<int>(v))) continue;
    c.halfspaces.push_back(p.vertices()[v] - center);
  }
  return c;
}

SliceResult slice(const Polytope& p, const FlatFrame& frame) {
  const int n = p.dim(), k = frame.k;
  if (k < 1 || k >= n) throw std::invalid_argument("slice: flat dimension must satisfy 1 <= k < n");
  SliceResult res;
  res.embedding = {frame.translation, frame.basis};
  std::vector<Vec> ys;
  Mat m(n, n);
  m.leftCols(k) = frame.basis;
  for (const auto& g : p.faces(n - k)) {
    m.rightCols(n - k) = -g.basis;
    Eigen::FullPivLU<Mat> lu(m);
    if (std::abs(lu.determinant()) < 1e-12) continue;
    Vec sol = lu.solve(g.origin - frame.translation);
    Vec y = sol.head(k);
    if (p.contains(frame.translation + frame.basis * y, 1e-9)) ys.push_back(y);
  }
  if (ys.empty()) return res;
  try {
    res.body = Polytope::build(ys, {1u << 20, 1e-9});
    res.status = SliceResult::Status::ok;
  } catch (const DegenerateError&) {
    res.status = SliceResult::Status::degenerate;
  }
  return res;
}

Polytope catalog(const std::string& name, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("catalog: dimension must be in 1..6");
  std::vector<Vec> verts, normals;
  std::vector<double> offsets;
  if (name == "cube") {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
      verts.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
      normals.push_back(-Vec::Unit(n, i));
      offsets.push_back(0.0);
      normals.push_back(Vec::Unit(n, i));
      offsets.push_back(1.0);
    }
  } else if (name == "simplex") {
    verts.push_back(Vec::Zero(n));
    for (int i = 0; i < n; ++i) {
      verts.push_back(Vec::Unit(n, i));
      normals.push_back(-Vec::Unit(n, i));
      offsets.push_back(0.0);
    }
    normals.push_back(Vec::Ones(n));
    offsets.push_back(1.0);
  } else if (name == "crosspolytope") {
    for (int i = 0; i < n; ++i) {
      verts.push_back(Vec::Unit(n, i));
      verts.push_back(-Vec::Unit(n, i));
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec s(n);
      for (int i = 0; i < n; ++i) s[i] = ((mask >> i) & 1) ? -1.0 : 1.0;
      normals.push_back(s);
      offsets.push_back(1.0);
    }
  } else {
    throw std::invalid_argument("catalog: unknown body '" + name + "'");
  }
  if (n == 1) return Polytope::build(verts);
  return Polytope::from_facets(verts, normals, offsets);
}

}  // namespace crofton
