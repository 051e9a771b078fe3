#include "crofton/coefficients.hpp"

#include <algorithm>

namespace crofton {

namespace {

ExactScalar G(HalfInt x) { return gamma(x); }
ExactScalar RG(HalfInt x) { return reciprocal_gamma(x); }
ExactScalar B(long n, long k) { return ExactScalar(binomial(n, k)); }
Rational frac(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
ExactScalar R(long p, long q = 1) { return ExactScalar(frac(p, q)); }
ExactScalar Rq(const Rational& q) { return ExactScalar(q); }
int sign(int e) { return e % 2 == 0 ? 1 : -1; }

// (k-1) Gamma((k-1)/2 + m/2), with the formal value at k = 1.
ExactScalar km1_gamma(int k, int m_twice, bool formal_k1) {
  if (k == 1) {
    if (!formal_k1) throw PreconditionError("k = 1 needs the formal specialization");
    return m_twice == 0 ? R(2) : R(0);
  }
  return R(k - 1) * G(half(k - 1 + m_twice));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

const std::vector<std::pair<Formula, std::string>>& names() {
  static const std::vector<std::pair<Formula, std::string>> table = {
      {Formula::thm_j_eq_k, "thm_j_eq_k"},
      {Formula::thm_local_general, "thm_local_general"},
      {Formula::thm_k1_local, "thm_k1_local"},
      {Formula::thm_global, "thm_global"},
      {Formula::cor_i0, "cor_i0"},
      {Formula::cor_s2, "cor_s2"},
      {Formula::cor_s3, "cor_s3"},
      {Formula::cor_j_km1, "cor_j_km1"},
      {Formula::cor_k1_global, "cor_k1_global"},
      {Formula::thm_ext_jkm1, "thm_ext_jkm1"},
      {Formula::thm_ext_k1, "thm_ext_k1"},
      {Formula::cor_psi, "cor_psi"},
      {Formula::eq_jkm1_weighted, "eq_jkm1_weighted"},
  };
  return table;
}

CoefficientTable make_table(Formula f, Params p) {
  CoefficientTable t;
  t.formula = f;
  t.params = p;
  return t;
}

void add(CoefficientTable& t, int z, Target target, ExactPolyPi c) {
  if (target.s < 0) {
    if (!c.is_zero()) throw std::logic_error("nonzero coefficient for a negative tensor index");
    return;
  }
  t.entries.push_back({z, target, std::move(c)});
}

}  // namespace

std::string to_string(Formula f) {
  for (const auto& [id, name] : names())
    if (id == f) return name;
  throw std::invalid_argument("unknown formula");
}

Formula parse_formula(const std::string& name) {
  for (const auto& [id, n] : names())
    if (n == name) return id;
  throw std::invalid_argument("unknown formula id '" + name + "'");
}

const std::vector<Formula>& all_formulas() {
  static const std::vector<Formula> all = [] {
    std::vector<Formula> v;
    for (const auto& e : names()) v.push_back(e.first);
    return v;
  }();
  return all;
}

std::map<Target, ExactPolyPi> CoefficientTable::by_target() const {
  std::map<Target, ExactPolyPi> out;
  for (const auto& e : entries) out[e.target] += e.coeff;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ExactScalar gamma_nkj(int n, int k, int j) {
  return B(n - k + j - 1, j) * G(half(n - k + 1)) / (R(2) * ExactScalar::pi_power(2));
}

ExactPolyPi lambda_local(int n, int k, int j, int s, int i, int z, int eps) {
  ExactPolyPi sum;
  for (int p = 0; p <= i; ++p)
    for (int q = std::max(z - p + eps, 0); q <= s / 2 + i - p; ++q) {
      const Rational theta = eps == 0 ? frac((n - k + j) * (k - 1 + 2 * p), 2)
                                      : frac(p * (n - k) - q * (k - 1));
      ExactScalar term = R(sign(p + q - z)) * B(i, p) * B(s + 2 * i - 2 * p, 2 * q) * B(p + q - eps, z) *
                         G(half(2 * q + 1)) * G(half(j + s) + (i - p - q + 1)) *
                         RG(half(n - k + j + s) + (i - p + 1)) * G(half(k - 1) + p) * G(half(n - k) + q) *
                         RG(half(n + 1) + (p + q)) * Rq(theta);
      sum += term;
    }
  return sum;
}

ExactPolyPi lambda_global(int n, int k, int j, int s, int i, int z) {
  if (s % 2 == 1 && z == s / 2 + i) return {};
  ExactPolyPi sum;
  for (int p = 0; p <= i; ++p)
    for (int q = std::max(z - p, 0); q <= s / 2 + i - p; ++q) {
      const Rational ratio = p + q == 0 ? Rational(1) : frac(z, p + q);
      const Rational theta = frac((n - k + j) * (k - 1 + 2 * p), 2) -
                             frac(p * (n - k) - q * (k - 1)) *
                                 (1 + frac(k - j - 1, s + 2 * i - 2 * z - 1) * (1 - ratio));
      ExactScalar term = R(sign(p + q - z)) * B(i, p) * B(s + 2 * i - 2 * p, 2 * q) * B(p + q, z) *
                         G(half(2 * q + 1)) * G(half(j + s) + (i - p - q + 1)) *
                         RG(half(n - k + j + s) + (i - p + 1)) * G(half(k - 1) + p) * G(half(n - k) + q) *
                         RG(half(n + 1) + (p + q)) * Rq(theta);
      sum += term;
    }
  return sum;
}

ExactScalar delta_nkjs(int n, int k, int j, int s) {
  return B(n - k + j - 1, j) * G(half(n - k + 1)) * G(half(k + 1)) * RG(half(n - k + j + s) + 1) /
         ExactScalar::pi_power(2);
}

ExactPolyPi eta(int n, int k, int j, int s, int z) {
  if (s % 2 == 1 && z == s / 2) return {};
  ExactPolyPi sum;
  for (int q = z; q <= s / 2; ++q) {
    const Rational last = frac(n - k + j, 2) + q + frac((k - j - 1) * (q - z), s - 2 * z - 1);
    sum += R(sign(q - z)) * B(s, 2 * q) * B(q, z) * G(half(2 * q + 1)) * G(half(j + s) + (1 - q)) *
           G(half(n - k) + q) * RG(half(n + 1) + q) * Rq(last);
  }
  return sum;
}

ExactPolyPi xi(int n, int k, int s, int z) {
  ExactPolyPi sum;
  for (int q = z; q <= s / 2; ++q)
    sum += R(sign(q - z)) * B(s, 2 * q) * B(q, z) * G(half(2 * q + 1)) * G(half(k + s + 1) - q) *
           G(half(n - k) + q) * RG(half(n - 1) + q);
  return sum;
}

ExactPolyPi lambda_jkm1(int n, int k, int s, int i, int z, bool formal_k1) {
  ExactPolyPi sum;
  for (int p = 0; p <= i; ++p)
    for (int q = std::max(z - p, 0); q <= s / 2 + i - p; ++q)
      sum += R(sign(p + q - z)) * B(i, p) * B(s + 2 * i - 2 * p, 2 * q) * B(p + q, z) * G(half(2 * q + 1)) *
             G(half(k + s + 1) + (i - p - q)) * RG(half(n + s + 1) + (i - p)) * km1_gamma(k, 2 * p, formal_k1) *
             G(half(n - k) + q) * RG(half(n - 1) + (p + q));
  return sum;
}

ExactScalar kappa(int n, int k, int s, int z, bool formal_k1) {
  if (s % 2 == 1 && 2 * z == s - 1)
    return ExactScalar::pi_power(n - k - 1) * R(2 * k * (n + s - 2), (n - 1) * (n - k + s - 1)) * G(half(n)) *
           RG(half(n - k)) * G(half(s + 2)) * RG(half(n + s + 1));
  return R(1, n - 1) * km1_gamma(k, s - 2 * z, formal_k1) * ExactScalar::pi_power(n - k) * G(half(n)) *
         RG(half(k)) * RG(half(n - k)) * G(half(s + 1)) * G(half(s + 2)) * RG(half(n - k + s + 1)) *
         RG(half(n + s - 1)) * G(half(n - k) + z) * RG(half(s + 2) - z) / ExactScalar(factorial(z));
}

ExactScalar coeff_thm_j_eq_k(int n, int k, int i) {
  require(0 <= k && k < n && i >= 0, "thm_j_eq_k requires 0 <= k < n and i >= 0");
  if (k == 0) return i == 0 ? R(1) : R(0);
  return G(half(n)) * G(half(k) + i) * RG(half(n) + i) * RG(half(k));
}

CoefficientTable coeff_local_general(int n, int k, int j, int s, int i) {
  require(0 <= j && j < k && k < n && k > 1, "thm_local_general requires j < k < n and k > 1");
  CoefficientTable t = make_table(Formula::thm_local_general, {n, k, j, s, i, 0});
  const ExactScalar g = gamma_nkj(n, k, j);
  for (int z = 0; z <= s / 2 + i; ++z) {
    add(t, z, {n - k + j, s + 2 * i - 2 * z, 0, z}, g * lambda_local(n, k, j, s, i, z, 0));
    add(t, z, {n - k + j, s + 2 * i - 2 * z - 2, 1, z}, g * lambda_local(n, k, j, s, i, z, 1));
  }
  return t;
}

CoefficientTable coeff_k1_local(int n, int s, int i) {
  require(n >= 2, "thm_k1_local requires n >= 2");
  CoefficientTable t = make_table(Formula::thm_k1_local, {n, 1, 0, s, i, 0});
  if (s % 2 == 0) {
    const int h = s / 2 + i;
    const ExactScalar pre =
        G(half(n)) * G(half(s + 1) + i) * RG(half(n + s + 1) + i) / ExactScalar::pi_power(2);
    for (int z = 0; z <= h; ++z)
      add(t, z, {n - 1, 2 * z, 0, h - z}, pre * R(sign(z)) * B(h, z) * R(1, 1 - 2 * z));
  } else {
    add(t, 0, {n - 1, 1, 0, (s - 1) / 2 + i},
        G(half(n)) * G(half(s + 2) + i) * RG(half(n + s + 1) + i) / ExactScalar::pi_power(1));
  }
  return t;
}

CoefficientTable coeff_global(int n, int k, int j, int s, int i) {
  require(0 <= j && j < k && k < n && k > 1, "thm_global requires j < k < n and k > 1");
  CoefficientTable t = make_table(Formula::thm_global, {n, k, j, s, i, 0});
  const ExactScalar g = gamma_nkj(n, k, j);
  for (int z = 0; z <= s / 2 + i; ++z)
    add(t, z, {n - k + j, s + 2 * i - 2 * z, 0, z}, g * lambda_global(n, k, j, s, i, z));
  return t;
}

CoefficientTable coeff_i0(int n, int k, int j, int s) {
  require(0 <= j && j < k && k < n, "cor_i0 requires 0 <= j < k < n");
  CoefficientTable t = make_table(Formula::cor_i0, {n, k, j, s, 0, 0});
  const ExactScalar d = delta_nkjs(n, k, j, s);
  for (int z = 0; z <= s / 2; ++z) add(t, z, {n - k + j, s - 2 * z, 0, z}, d * eta(n, k, j, s, z));
  return t;
}

CoefficientTable coeff_s2(int n, int k, int j) {
  require(0 <= j && j < k && k < n, "cor_s2 requires 0 <= j < k < n");
  CoefficientTable t = make_table(Formula::cor_s2, {n, k, j, 2, 0, 0});
  const ExactScalar a = G(half(k + 1)) * G(half(n - k + j + 1)) * RG(half(n + 3)) * RG(half(j + 1));
  add(t, 0, {n - k + j, 2, 0, 0}, a * R(n - k + n * j + j, 2 * (n - k + j)));
  add(t, 1, {n - k + j, 0, 0, 1}, a * R(n - k, 4 * (n - k + j)));
  return t;
}

CoefficientTable coeff_s3(int n, int k, int j) {
  require(0 <= j && j < k && k < n, "cor_s3 requires 0 <= j < k < n");
  CoefficientTable t = make_table(Formula::cor_s3, {n, k, j, 3, 0, 0});
  add(t, 0, {n - k + j, 3, 0, 0},
      R(j + 1, n - k + j + 1) * G(half(k + 1)) * G(half(n - k + j)) * RG(half(n + 1)) * RG(half(j)));
  return t;
}

CoefficientTable coeff_jkm1_weighted(int n, int k, int s, int i) {
  require(1 < k && k < n, "eq_jkm1_weighted requires 1 < k < n");
  CoefficientTable t = make_table(Formula::eq_jkm1_weighted, {n, k, k - 1, s, i, 0});
  const ExactScalar g = gamma_nkj(n, k, k - 1);
  for (int z = 0; z <= s / 2 + i; ++z)
    add(t, z, {n - 1, s + 2 * i - 2 * z, 0, z}, g * lambda_jkm1(n, k, s, i, z));
  return t;
}

CoefficientTable coeff_j_km1_formal(int n, int k, int s) {
  require(1 <= k && k < n, "cor_j_km1 (formal) requires 1 <= k < n");
  CoefficientTable t = make_table(Formula::cor_j_km1, {n, k, k - 1, s, 0, 0});
  const ExactScalar d = delta_nkjs(n, k, k - 1, s);
  for (int z = 0; z <= s / 2; ++z) add(t, z, {n - 1, s - 2 * z, 0, z}, d * xi(n, k, s, z));
  return t;
}

CoefficientTable coeff_j_km1(int n, int k, int s, int i) {
  require(1 < k && k < n, "cor_j_km1 requires 1 < k < n");
  if (i > 0) return coeff_jkm1_weighted(n, k, s, i);
  return coeff_j_km1_formal(n, k, s);
}

CoefficientTable coeff_k1_global(int n, int s) {
  require(n >= 2, "cor_k1_global requires n >= 2");
  CoefficientTable t = make_table(Formula::cor_k1_global, {n, 1, 0, s, 0, 0});
  if (s % 2 == 1) return t;
  const ExactScalar pre = R(2) * omega(n + s + 1) / (ExactScalar::pi_power(2) * omega(s + 1) * omega(n));
  for (int z = 0; z <= s / 2; ++z)
    add(t, z, {n - 1, 2 * z, 0, s / 2 - z}, pre * R(sign(z), 1 - 2 * z) * B(s / 2, z));
  return t;
}

CoefficientTable coeff_extrinsic_formal(int n, int k, int s) {
  require(1 <= k && k < n, "thm_ext_jkm1 (formal) requires 1 <= k < n");
  CoefficientTable t = make_table(Formula::thm_ext_jkm1, {n, k, k - 1, s, 0, 0});
  for (int z = 0; z <= s / 2; ++z) add(t, z, {n - 1, s - 2 * z, 0, z}, kappa(n, k, s, z, true));
  return t;
}

CoefficientTable coeff_extrinsic(int n, int k, int s) {
  require(1 < k && k < n, "thm_ext_jkm1 requires 1 < k < n (use thm_ext_k1 for k = 1)");
  return coeff_extrinsic_formal(n, k, s);
}

ExactScalar coeff_extrinsic_k1(int n, int s) {
  require(n >= 2, "thm_ext_k1 requires n >= 2");
  const int m = (s + 1) / 2;
  return ExactScalar::pi_power(n - 2) * G(half(n)) * RG(half(n + 1)) * G(half(2 * m + 1)) * RG(half(n) + m);
}

ExactScalar coeff_psi(int n, int k, int s) {
  require(0 < k && k < n, "cor_psi requires 0 < k < n");
  return ExactScalar::pi_power(n - k) * R(1, n - 1) * km1_gamma(k, s, true) * G(half(n)) * RG(half(k)) *
         RG(half(n + s - 1)) * G(half(s + 1)) * RG(half(n - k + s + 1));
}

CoefficientTable psi_combination(int n, int k, int s) {
  require(0 < k && k < n, "cor_psi requires 0 < k < n");
  CoefficientTable t = make_table(Formula::cor_psi, {n, k, k - 1, s, 0, 0});
  for (int a = 0; 2 * a <= s; ++a) {
    const int u = s - 2 * a;
    for (int z = 0; 2 * z <= u; ++z) {
      ExactScalar ext;
      if (k == 1)
        ext = z == u / 2 ? coeff_extrinsic_k1(n, u) : R(0);
      else
        ext = kappa(n, k, u, z);
      if (ext.is_zero()) continue;
      const int w = u - 2 * z;
      for (int b = 0; 2 * b <= w; ++b)
        add(t, a + z + b, {n - 1, w - 2 * b, 0, a + z + b, Basis::psi},
            psi_coefficient(n, s, a) * ext * psi_inverse_coefficient(n, w, b));
    }
  }
  return t;
}

CoefficientTable coefficient_table(Formula f, const Params& p) {
  require(p.n >= 2, "n must be at least 2");
  require(p.s >= 0 && p.i >= 0 && p.r >= 0 && p.j >= 0 && p.k >= 0, "indices must be nonnegative");
  const auto unweighted = [&](const char* id) {
    require(p.i == 0, std::string(id) + " has no Q(E)^i weight (requires i = 0)");
  };
  CoefficientTable t;
  switch (f) {
    case Formula::thm_j_eq_k: {
      const ExactScalar c = coeff_thm_j_eq_k(p.n, p.k, p.i);
      t = make_table(f, {p.n, p.k, p.k, p.s, p.i, 0});
      if (p.s == 0) add(t, 0, {p.n, 0, 0, p.i}, c);
      break;
    }
    case Formula::thm_local_general: t = coeff_local_general(p.n, p.k, p.j, p.s, p.i); break;
    case Formula::thm_k1_local: t = coeff_k1_local(p.n, p.s, p.i); break;
    case Formula::thm_global: t = coeff_global(p.n, p.k, p.j, p.s, p.i); break;
    case Formula::cor_i0: unweighted("cor_i0"); t = coeff_i0(p.n, p.k, p.j, p.s); break;
    case Formula::cor_s2: unweighted("cor_s2"); t = coeff_s2(p.n, p.k, p.j); break;
    case Formula::cor_s3: unweighted("cor_s3"); t = coeff_s3(p.n, p.k, p.j); break;
    case Formula::cor_j_km1: unweighted("cor_j_km1"); t = coeff_j_km1(p.n, p.k, p.s, 0); break;
    case Formula::eq_jkm1_weighted: t = coeff_jkm1_weighted(p.n, p.k, p.s, p.i); break;
    case Formula::cor_k1_global: unweighted("cor_k1_global"); t = coeff_k1_global(p.n, p.s); break;
    case Formula::thm_ext_jkm1: unweighted("thm_ext_jkm1"); t = coeff_extrinsic(p.n, p.k, p.s); break;
    case Formula::thm_ext_k1: {
      unweighted("thm_ext_k1");
      const ExactScalar c = coeff_extrinsic_k1(p.n, p.s);
      t = make_table(f, {p.n, 1, 0, p.s, 0, 0});
      add(t, 0, {p.n - 1, p.s % 2, 0, p.s / 2}, c);
      break;
    }
    case Formula::cor_psi: {
      unweighted("cor_psi");
      const ExactScalar c = coeff_psi(p.n, p.k, p.s);
      t = make_table(f, {p.n, p.k, p.k - 1, p.s, 0, 0});
      add(t, 0, {p.n - 1, p.s, 0, 0, Basis::psi}, c);
      break;
    }
  }
  t.params.r = p.r;
  return t;
}

MeasureKind lhs_kind(Formula f) {
  switch (f) {
    case Formula::thm_ext_jkm1:
    case Formula::thm_ext_k1:
    case Formula::cor_psi: return MeasureKind::extrinsic;
    default: return MeasureKind::intrinsic;
  }
}

bool is_global(Formula f) {
  switch (f) {
    case Formula::thm_global:
    case Formula::cor_i0:
    case Formula::cor_s2:
    case Formula::cor_s3:
    case Formula::cor_k1_global: return true;
    default: return false;
  }
}

TensorF rhs_tensor(const CoefficientTable& table, const Polytope& body, const Box* box, const ConeOptions& opts) {
  const int n = body.dim();
  if (n != table.params.n) throw std::invalid_argument("rhs_tensor: body dimension differs from n");
  const int r = table.params.r;
  const Params& p = table.params;
  // LHS rank: r + s plus the weight, shifted for the fixed-s corollaries.
  TensorF total(n, r + p.s + 2 * p.i);
  for (const auto& [target, coeff] : table.by_target()) {
    TensorF m;
    if (target.basis == Basis::psi) {
      std::vector<TensorF> phis;
      for (int mm = 0; 2 * mm <= target.s; ++mm)
        phis.push_back(phi(body, {n, target.order, r, target.s - 2 * mm, 0, MeasureKind::extrinsic}, box, nullptr,
                           opts));
      m = psi_from_phi(phis, n, target.s);
    } else {
      m = phi(body, {n, target.order, r, target.s, target.eps, MeasureKind::extrinsic}, box, nullptr, opts);
    }
    if (target.q_power > 0) m = sym_mul(sym_pow(q_metric<double>(n), target.q_power), m);
    total.add_scaled(m, coeff.to_double());
  }
  return total;
}

}  // namespace crofton
