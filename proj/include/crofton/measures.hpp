#pragma once

#include <cstdint>
#include <vector>

#include "crofton/exact.hpp"
#include "crofton/polytope.hpp"
#include "crofton/symtensor.hpp"

namespace crofton {

enum class MeasureKind { extrinsic, intrinsic };

// Index tuple of phi_j^{r,s,eps}. ambient_dim is n for extrinsic measures and
// the flat dimension k for intrinsic ones.
struct MeasureSpec {
  int ambient_dim = 0;
  int j = 0;
  int r = 0;
  int s = 0;
  int eps = 0;
  MeasureKind kind = MeasureKind::extrinsic;

  int rank() const { return r + s + 2 * eps; }
  // Index combinations for which the measure is zero by convention.
  bool vanishes() const;
};

struct MeasureValue {
  MeasureSpec spec;
  TensorF value;
};

// Settings for the Monte Carlo tier of cone moments (cones of dimension >= 3).
struct ConeOptions {
  double target_stderr = 1e-4;
  std::uint64_t seed = 0x5eed;
  std::size_t max_samples = 4'000'000;
};

void set_verbose(bool on);
bool verbose();

// Integral of u^s over the cone intersected with the unit sphere, in the cone's ambient coordinates.
TensorF cone_sphere_moment(const NormalCone& cone, int s, const ConeOptions& opts = {});
// Solid angle of a pointed 3-dimensional cone given by its extreme rays.
double solid_angle_3d(const std::vector<Eigen::Vector3d>& rays);
// Integral of w^q over the unit sphere of the m-dimensional subspace spanned by basis.
TensorF full_sphere_moment(int m, int q, const Mat& basis);
// Integral of u^s over {u in S(span(nu) + W) : u.nu >= 0}, nu a unit vector orthogonal to W.
TensorF half_sphere_moment(const Vec& nu, const Mat& w_basis, int s);

// Maps cone data through x -> basis * x (basis with orthonormal columns).
NormalCone embed_cone(const NormalCone& cone, const Mat& basis);

enum class FaceWeight { none, face_metric, normal_metric };

// Sum over j-faces F of weight(F) * int_{F cap box} x^r * int_{N(P,F) cap S} u^s.
// face_metric is Q(F), normal_metric is Q(F^perp).
TensorF face_sum(const Polytope& p, int j, int r, int s, FaceWeight weight, const Box* box = nullptr,
                 const Embedding* emb = nullptr, const ConeOptions& opts = {});

// phi_j^{r,s,eps}(P, box). If emb is given, P lives in flat coordinates and the
// (intrinsic) result is expressed in the ambient coordinates of the embedding.
TensorF phi(const Polytope& p, const MeasureSpec& spec, const Box* box = nullptr,
            const Embedding* emb = nullptr, const ConeOptions& opts = {});
MeasureValue measure(const Polytope& p, const MeasureSpec& spec, const Box* box = nullptr);
TensorF minkowski_tensor(const Polytope& p, int j, int r, int s, const ConeOptions& opts = {});

// Extrinsic phi_j^{r,s,0} in R^n of a k-dimensional body given in flat coordinates.
// j = k and j = k-1 use the face formula directly; smaller j go through intrinsic_to_extrinsic.
TensorF phi_extrinsic_of_flat_body(const Polytope& body, const Embedding& emb, int j, int r, int s,
                                   const Box* box = nullptr, const ConeOptions& opts = {});

// Coefficients of the Psi basis: psi^s = sum_j psi_coefficient(n,s,j) Q^j phi^{s-2j}
// and phi^s = sum_j psi_inverse_coefficient(n,s,j) Q^j psi^{s-2j}.
ExactScalar psi_coefficient(int n, int s, int j);
ExactScalar psi_inverse_coefficient(int n, int s, int j);
// values[m] holds the measure with tensor index s - 2m, m = 0..floor(s/2).
TensorF psi_from_phi(const std::vector<TensorF>& phis, int n, int s);
TensorF phi_from_psi(const std::vector<TensorF>& psis, int n, int s);

// Coefficient of Q^l Q(E)^{m-l} phi~^{r,s-2m} in the extrinsic measure of a body in a k-flat.
ExactScalar intrinsic_extrinsic_coefficient(int n, int k, int j, int s, int m, int l);
// intrinsic[m] = phi~_j^{r,s-2m,0}(K) expressed in R^n; flat_basis spans L(E).
TensorF intrinsic_to_extrinsic(const std::vector<TensorF>& intrinsic, const Mat& flat_basis, int j, int k,
                               int r, int s, int n);

}  // namespace crofton
