#include "crofton/measures.hpp"

#include <atomic>
#include <iostream>

namespace crofton {

namespace {

std::atomic<bool> g_verbose{false};

Mat complement_of(const Mat& basis) {
  const int n = static_cast<int>(basis.rows());
  if (basis.cols() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(basis, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(n - basis.cols());
}

TensorF q_power(int n, int p) { return sym_pow(q_metric<double>(n), p); }

}  // namespace

void set_verbose(bool on) { g_verbose = on; }
bool verbose() { return g_verbose; }

bool MeasureSpec::vanishes() const {
  const int d = ambient_dim;
  if (j < 0 || j > d || r < 0 || s < 0) return true;
  if (j == d && (s != 0 || eps != 0)) return true;
  if (eps == 1 && j < 1) return true;
  return false;
}

TensorF face_sum(const Polytope& p, int j, int r, int s, FaceWeight weight, const Box* box,
                 const Embedding* emb, const ConeOptions& opts) {
  const int n = emb ? static_cast<int>(emb->origin.size()) : p.dim();
  const int extra = weight == FaceWeight::none ? 0 : 2;
  TensorF total(n, r + s + extra);
  ConeOptions cone_opts = opts;
  for (const Face& f : p.faces(j)) {
    TensorF moment = face_moment_tensor(p, f, r, box, emb);
    if (moment.is_zero()) continue;
    NormalCone cone = normal_cone(p, f);
    if (emb) cone = embed_cone(cone, emb->basis);
    ++cone_opts.seed;
    TensorF term = sym_mul(moment, cone_sphere_moment(cone, s, cone_opts));
    if (weight != FaceWeight::none) {
      const Mat face_dirs = emb ? Mat(emb->basis * f.basis) : f.basis;
      TensorF qf = q_of_subspace(face_dirs);
      if (weight == FaceWeight::normal_metric) qf = q_metric<double>(n) - qf;
      term = sym_mul(term, qf);
    }
    total += term;
  }
  return total;
}

TensorF phi(const Polytope& p, const MeasureSpec& spec, const Box* box, const Embedding* emb,
            const ConeOptions& opts) {
  if (spec.ambient_dim != p.dim())
    throw std::invalid_argument("phi: measure dimension does not match the polytope");
  if (emb && spec.kind != MeasureKind::intrinsic)
    throw std::invalid_argument("phi: an embedding is only meaningful for intrinsic measures");
  const int n = emb ? static_cast<int>(emb->origin.size()) : p.dim();
  if (spec.eps < 0 || spec.eps > 1) throw std::invalid_argument("phi: eps must be 0 or 1");
  if (spec.vanishes()) {
    if (verbose())
      std::clog << "warning: phi_" << spec.j << "^{" << spec.r << "," << spec.s << "," << spec.eps
                << "} is outside the index range and taken as 0\n";
    return TensorF(n, std::max(spec.rank(), 0));
  }
  if (spec.j == p.dim()) return face_moment_tensor(p, p.faces(p.dim())[0], spec.r, box, emb);
  return face_sum(p, spec.j, spec.r, spec.s, spec.eps ? FaceWeight::face_metric : FaceWeight::none, box, emb,
                  opts);
}

MeasureValue measure(const Polytope& p, const MeasureSpec& spec, const Box* box) {
  return {spec, phi(p, spec, box)};
}

TensorF minkowski_tensor(const Polytope& p, int j, int r, int s, const ConeOptions& opts) {
  return phi(p, {p.dim(), j, r, s, 0, MeasureKind::extrinsic}, nullptr, nullptr, opts);
}

TensorF phi_extrinsic_of_flat_body(const Polytope& body, const Embedding& emb, int j, int r, int s,
                                   const Box* box, const ConeOptions& opts) {
  const int n = static_cast<int>(emb.origin.size());
  const int k = body.dim();
  if (j < 0 || j > k || r < 0 || s < 0) return TensorF(n, std::max(r + s, 0));
  const Mat normal_space = complement_of(emb.basis);
  if (j == k) {
    TensorF vol = face_moment_tensor(body, body.faces(k)[0], r, box, &emb);
    return sym_mul(vol, full_sphere_moment(n - k, s, normal_space));
  }
  if (j == k - 1) {
    TensorF total(n, r + s);
    for (const Face& f : body.faces(j)) {
      TensorF moment = face_moment_tensor(body, f, r, box, &emb);
      if (moment.is_zero()) continue;
      const Vec nu = emb.basis * body.facet_normals()[f.facet_ids.at(0)];
      total += sym_mul(moment, half_sphere_moment(nu, normal_space, s));
    }
    return total;
  }
  std::vector<TensorF> intrinsic;
  for (int m = 0; 2 * m <= s; ++m)
    intrinsic.push_back(phi(body, {k, j, r, s - 2 * m, 0, MeasureKind::intrinsic}, box, &emb, opts));
  return intrinsic_to_extrinsic(intrinsic, emb.basis, j, k, r, s, n);
}

ExactScalar psi_coefficient(int n, int s, int j) {
  ExactScalar c = ExactScalar(binomial(s, 2 * j)) * gamma(half(2 * j + 1)) *
                  gamma_ratio(half(n) + (s - j - 1), half(n) + (s - 1)) / ExactScalar::pi_power(1);
  return j % 2 == 0 ? c : -c;
}

ExactScalar psi_inverse_coefficient(int n, int s, int j) {
  return ExactScalar(binomial(s, 2 * j)) * gamma(half(2 * j + 1)) *
         gamma_ratio(half(n) + (s - 2 * j), half(n) + (s - j)) / ExactScalar::pi_power(1);
}

namespace {

TensorF combine_with_q(const std::vector<TensorF>& values, int n, int s, ExactScalar (*coef)(int, int, int)) {
  if (static_cast<int>(values.size()) < s / 2 + 1)
    throw std::invalid_argument("Psi transform: need the measures for all s - 2j, j = 0..floor(s/2)");
  const int dim = values[0].dim();
  TensorF out(dim, values[0].rank());
  for (int j = 0; 2 * j <= s; ++j)
    out.add_scaled(sym_mul(q_power(dim, j), values[j]), coef(n, s, j).to_double());
  return out;
}

}  // namespace

TensorF psi_from_phi(const std::vector<TensorF>& phis, int n, int s) {
  return combine_with_q(phis, n, s, &psi_coefficient);
}

TensorF phi_from_psi(const std::vector<TensorF>& psis, int n, int s) {
  return combine_with_q(psis, n, s, &psi_inverse_coefficient);
}

ExactScalar intrinsic_extrinsic_coefficient(int n, int k, int j, int s, int m, int l) {
  ExactScalar c = ExactScalar::pi_power(n - k) * ExactScalar(factorial(s)) / gamma(half(n - j + s)) *
                  ExactScalar(binomial(m, l)) * gamma(half(k - j + s) - m) /
                  ExactScalar(Rational(mpz_class(1) << (2 * m)) * factorial(m) * factorial(s - 2 * m));
  return (m - l) % 2 == 0 ? c : -c;
}

TensorF intrinsic_to_extrinsic(const std::vector<TensorF>& intrinsic, const Mat& flat_basis, int j, int k,
                               int r, int s, int n) {
  if (!(0 <= j && j < k && k < n)) throw std::invalid_argument("intrinsic_to_extrinsic requires j < k < n");
  if (static_cast<int>(intrinsic.size()) < s / 2 + 1)
    throw std::invalid_argument("intrinsic_to_extrinsic: need phi~^{r,s-2m} for m = 0..floor(s/2)");
  const TensorF qe = q_of_subspace(flat_basis);
  TensorF out(n, r + s);
  for (int m = 0; 2 * m <= s; ++m)
    for (int l = 0; l <= m; ++l) {
      const double c = intrinsic_extrinsic_coefficient(n, k, j, s, m, l).to_double();
      out.add_scaled(sym_mul(sym_mul(q_power(n, l), sym_pow(qe, m - l)), intrinsic[m]), c);
    }
  return out;
}

}  // namespace crofton
