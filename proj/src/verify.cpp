#include <cmath>

#include "crofton/grassmann.hpp"

namespace crofton {

namespace {

// Tensor of the slice measure inside (intrinsic) or as a subset of R^n (extrinsic).
TensorF slice_measure(const Polytope& body, const Embedding& emb, const CroftonQuery& q, int n) {
  const Params& p = q.params;
  const int k = body.dim();
  const int j = q.formula == Formula::thm_j_eq_k ? k : p.j;
  if (q.formula == Formula::cor_psi) {
    std::vector<TensorF> phis;
    for (int m = 0; 2 * m <= p.s; ++m)
      phis.push_back(phi_extrinsic_of_flat_body(body, emb, j, p.r, p.s - 2 * m, q.box, q.cone));
    return psi_from_phi(phis, n, p.s);
  }
  if (lhs_kind(q.formula) == MeasureKind::extrinsic)
    return phi_extrinsic_of_flat_body(body, emb, j, p.r, p.s, q.box, q.cone);
  return phi(body, {k, j, p.r, p.s, 0, MeasureKind::intrinsic}, q.box, &emb, q.cone);
}

// Fixes the slice indices implied by the formula.
Params effective_params(Formula f, Params p) {
  switch (f) {
    case Formula::thm_j_eq_k: p.j = p.k; break;
    case Formula::thm_k1_local:
    case Formula::cor_k1_global:
    case Formula::thm_ext_k1: p.k = 1; p.j = 0; break;
    case Formula::cor_s2: p.s = 2; break;
    case Formula::cor_s3: p.s = 3; break;
    case Formula::cor_j_km1:
    case Formula::thm_ext_jkm1:
    case Formula::cor_psi:
    case Formula::eq_jkm1_weighted: p.j = p.k - 1; break;
    default: break;
  }
  return p;
}

}  // namespace

MCEstimate crofton_lhs_mc(const Polytope& body, const CroftonQuery& query, const MCSettings& mc) {
  CroftonQuery q = query;
  q.params = effective_params(q.formula, q.params);
  const Params& p = q.params;
  const int n = body.dim();
  if (p.n != n) throw std::invalid_argument("crofton_lhs_mc: body dimension differs from n");
  if (p.k < 1 || p.k >= n) throw std::invalid_argument("crofton_lhs_mc: need 1 <= k < n");
  const int weight_power = lhs_kind(q.formula) == MeasureKind::intrinsic ? p.i : 0;
  const Vec center = body.vertex_centroid();
  const double radius = 1.05 * body.circumradius(center);
  const double weight = kappa_ball(n - p.k).to_double() * std::pow(radius, n - p.k);
  const int rank = p.r + p.s + 2 * weight_power;
  auto draw = [&](Stream& st) {
    const FlatSample flat = sample_flat_hitting_ball(n, p.k, radius, center, st);
    const SliceResult cut = slice(body, flat.frame);
    if (cut.status != SliceResult::Status::ok) return TensorF(n, rank);
    TensorF m = slice_measure(*cut.body, cut.embedding, q, n);
    if (weight_power > 0) m = sym_mul(sym_pow(q_of_subspace(flat.frame.basis), weight_power), m);
    return m;
  };
  return run_mc(n, rank, mc.samples, mc.seed, mc.workers, weight, draw);
}

VerificationReport verify(const Polytope& body, const CroftonQuery& query, const MCSettings& mc) {
  if (is_global(query.formula) && (query.box || query.params.r != 0))
    throw PreconditionError(to_string(query.formula) + " is a global formula (requires r = 0 and no box)");
  const Params p = effective_params(query.formula, query.params);
  const CoefficientTable table = coefficient_table(query.formula, p);
  TensorF rhs = rhs_tensor(table, body, query.box, query.cone);
  MCEstimate lhs = crofton_lhs_mc(body, query, mc);
  VerificationReport rep;
  rep.formula = query.formula;
  rep.params = p;
  rep.boxed = query.box != nullptr;
  rep.comparison = compare(to_string(query.formula), std::move(lhs), std::move(rhs), mc.threshold);
  return rep;
}

}  // namespace crofton
