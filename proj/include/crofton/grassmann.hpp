#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "crofton/coefficients.hpp"
#include "crofton/polytope.hpp"
#include "crofton/symtensor.hpp"

namespace crofton {

using Stream = std::mt19937_64;

// Independent stream for a worker, derived from (seed, worker) by hashing.
std::uint64_t stream_seed(std::uint64_t seed, int worker);

// n x k orthonormal basis of a Haar-distributed subspace.
Mat sample_grassmann(int n, int k, Stream& stream);

struct FlatSample {
  FlatFrame frame;
  double weight = 0.0;  // kappa_{n-k} R^{n-k}
};

// Haar direction space L and a translation uniform in the (n-k)-ball of radius R
// in L^perp around the projection of center.
FlatSample sample_flat_hitting_ball(int n, int k, double radius, const Vec& center, Stream& stream);

// [F, L] for subspaces given by orthonormal bases.
double generalized_sine(const Mat& f_basis, const Mat& l_basis);

struct MCEstimate {
  TensorF mean;
  std::vector<double> stderr_;  // per coefficient of mean
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  double weight = 1.0;
};

// weight * sample mean of draw(stream, index). The index range is split evenly
// among workers; worker w uses stream_seed(seed, w); merged in worker order.
MCEstimate run_mc(int dim, int rank, std::size_t samples, std::uint64_t seed, int workers, double weight,
                  const std::function<TensorF(Stream&)>& draw);

struct ComparisonReport {
  std::string name;
  MCEstimate lhs;
  TensorF rhs;
  std::vector<double> z;
  double z_max = 0.0;
  double threshold = 4.0;
  bool pass = false;
};

ComparisonReport compare(std::string name, MCEstimate lhs, TensorF rhs, double threshold = 4.0,
                         double stderr_floor = 1e-12);

struct MCSettings {
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
  double threshold = 4.0;
};

// Mean of Q(L)^i over G(n, k).
ComparisonReport check_lemma_Q_power(int n, int k, int i, const MCSettings& mc);
// Mean of [F, L]^2 Q(L)^i over G(n, k), F of dimension r with k + r >= n.
ComparisonReport check_lemma_sine_Q(int n, int k, int r, int i, const Mat& f_basis, const MCSettings& mc);
// Mean of Q(L)^i pi_L(u)^s |p_L(u)|^{j-k} [F, L]^2 over G(n, k); F of dimension n-k+j, u a unit vector in F^perp.
ComparisonReport check_prop_integrand(int n, int k, int j, int s, int i, const Mat& f_basis, const Vec& u,
                                      const MCSettings& mc);

// Exact right-hand sides of the three checks above.
TensorF lemma_Q_power_rhs(int n, int k, int i);
TensorF lemma_sine_Q_rhs(int n, int k, int r, int i, const Mat& f_basis);
TensorF prop_integrand_rhs(int n, int k, int j, int s, int i, const Mat& f_basis, const Vec& u);

struct CroftonQuery {
  Formula formula = Formula::thm_j_eq_k;
  Params params;
  const Box* box = nullptr;
  ConeOptions cone;
};

// Estimate of the left-hand side integral over A(n, k).
MCEstimate crofton_lhs_mc(const Polytope& body, const CroftonQuery& q, const MCSettings& mc);

struct VerificationReport {
  Formula formula = Formula::thm_j_eq_k;
  Params params;
  bool boxed = false;
  ComparisonReport comparison;
};

VerificationReport verify(const Polytope& body, const CroftonQuery& q, const MCSettings& mc);

}  // namespace crofton
