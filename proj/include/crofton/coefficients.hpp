#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crofton/exact.hpp"
#include "crofton/measures.hpp"

namespace crofton {

enum class Formula {
  thm_j_eq_k,         // intrinsic, j = k
  thm_local_general,  // intrinsic, j < k, k > 1, local
  thm_k1_local,       // intrinsic, k = 1, local
  thm_global,         // intrinsic, j < k, k > 1, translation invariant
  cor_i0,             // global, i = 0
  cor_s2,             // global, i = 0, s = 2 closed form
  cor_s3,             // global, i = 0, s = 3 closed form
  cor_j_km1,          // intrinsic, j = k - 1, local, i = 0
  cor_k1_global,      // intrinsic, k = 1, global
  thm_ext_jkm1,       // extrinsic, j = k - 1, k > 1
  thm_ext_k1,         // extrinsic, k = 1
  cor_psi,            // Psi basis, j = k - 1
  eq_jkm1_weighted,   // intrinsic, j = k - 1, weight Q(E)^i
};

std::string to_string(Formula f);
Formula parse_formula(const std::string& name);
const std::vector<Formula>& all_formulas();

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Params {
  int n = 3;
  int k = 1;
  int j = 0;
  int s = 0;
  int i = 0;
  int r = 0;
};

enum class Basis { phi, psi };

// Q^q_power * phi_order^{r, s, eps} (or psi_order^{r, s} when basis is psi).
struct Target {
  int order = 0;
  int s = 0;
  int eps = 0;
  int q_power = 0;
  Basis basis = Basis::phi;

  auto key() const { return std::tuple(order, s, eps, q_power, basis); }
  friend bool operator<(const Target& a, const Target& b) { return a.key() < b.key(); }
  friend bool operator==(const Target& a, const Target& b) { return a.key() == b.key(); }
};

struct CoefficientEntry {
  int z = 0;
  Target target;
  ExactPolyPi coeff;
};

struct CoefficientTable {
  Formula formula = Formula::thm_j_eq_k;
  Params params;
  std::vector<CoefficientEntry> entries;

  // Coefficients summed per target, zeros dropped.
  std::map<Target, ExactPolyPi> by_target() const;
  bool empty_or_zero() const { return by_target().empty(); }
};

// Building blocks, evaluated term by term.
ExactScalar gamma_nkj(int n, int k, int j);
ExactPolyPi lambda_local(int n, int k, int j, int s, int i, int z, int eps);
ExactPolyPi lambda_global(int n, int k, int j, int s, int i, int z);
ExactScalar delta_nkjs(int n, int k, int j, int s);
ExactPolyPi eta(int n, int k, int j, int s, int z);
ExactPolyPi xi(int n, int k, int s, int z);
// Weighted j = k - 1 coefficient (without gamma_nkj). formal_k1 allows k = 1 with
// (k-1) Gamma((k-1)/2 + p) read as 2 for p = 0 and 0 otherwise.
ExactPolyPi lambda_jkm1(int n, int k, int s, int i, int z, bool formal_k1 = false);
// Extrinsic j = k - 1 coefficient; formal_k1 reads (k-1) Gamma((k-1)/2 + m) as above.
ExactScalar kappa(int n, int k, int s, int z, bool formal_k1 = false);

ExactScalar coeff_thm_j_eq_k(int n, int k, int i);
CoefficientTable coeff_local_general(int n, int k, int j, int s, int i);
CoefficientTable coeff_k1_local(int n, int s, int i);
CoefficientTable coeff_global(int n, int k, int j, int s, int i);
CoefficientTable coeff_i0(int n, int k, int j, int s);
CoefficientTable coeff_s2(int n, int k, int j);
CoefficientTable coeff_s3(int n, int k, int j);
// i = 0 uses delta * xi, i > 0 the weighted form.
CoefficientTable coeff_j_km1(int n, int k, int s, int i);
CoefficientTable coeff_jkm1_weighted(int n, int k, int s, int i);
// delta * xi with k = 1 allowed (formal specialization).
CoefficientTable coeff_j_km1_formal(int n, int k, int s);
CoefficientTable coeff_k1_global(int n, int s);
CoefficientTable coeff_extrinsic(int n, int k, int s);
// kappa table with k = 1 allowed (formal specialization).
CoefficientTable coeff_extrinsic_formal(int n, int k, int s);
ExactScalar coeff_extrinsic_k1(int n, int s);
ExactScalar coeff_psi(int n, int k, int s);
// The extrinsic j = k - 1 tables pushed through the Psi basis on both sides:
// coefficients of Q^m psi_{n-1}^{r, s-2m}.
CoefficientTable psi_combination(int n, int k, int s);

// Validates params and builds the table for the formula.
CoefficientTable coefficient_table(Formula f, const Params& p);

// Sum of coefficient * Q^q_power * target measure of the body.
TensorF rhs_tensor(const CoefficientTable& table, const Polytope& body, const Box* box = nullptr,
                   const ConeOptions& opts = {});

// Kind of slice measure on the left-hand side.
MeasureKind lhs_kind(Formula f);
// Whether the formula is stated for beta = R^n only.
bool is_global(Formula f);

}  // namespace crofton
