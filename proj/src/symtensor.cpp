#include "crofton/symtensor.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace crofton {

namespace {

constexpr int kBinomSize = IndexSpace::kMaxRank + IndexSpace::kMaxDim + 2;

struct BinomTable {
  std::array<std::array<std::size_t, kBinomSize>, kBinomSize> c{};
  BinomTable() {
    for (int n = 0; n < kBinomSize; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomTable& binom_table() {
  static const BinomTable t;
  return t;
}

void enumerate(int dim, int rank, std::vector<int>& prefix, std::vector<int>& out) {
  if (static_cast<int>(prefix.size()) == dim - 1) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    out.push_back(rank);
    return;
  }
  for (int v = 0; v <= rank; ++v) {
    prefix.push_back(v);
    enumerate(dim, rank - v, prefix, out);
    prefix.pop_back();
  }
}

double factorial_d(int n) {
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int i = 1; i < 171; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.at(n);
}

}  // namespace

std::size_t count_multi_indices(int dim, int rank) {
  return binom_table().c.at(dim + rank - 1).at(rank);
}

IndexSpace::IndexSpace(int dim, int rank) : dim_(dim), rank_(rank), size_(count_multi_indices(dim, rank)) {
  std::vector<int> prefix;
  exps_.reserve(size_ * dim);
  enumerate(dim, rank, prefix, exps_);
}

const IndexSpace& IndexSpace::get(int dim, int rank) {
  if (dim < 1 || dim > kMaxDim || rank < 0 || rank > kMaxRank)
    throw std::out_of_range("IndexSpace: dimension or rank outside the supported range");
  static std::array<std::array<std::once_flag, kMaxRank + 1>, kMaxDim + 1> flags;
  static std::array<std::array<std::unique_ptr<IndexSpace>, kMaxRank + 1>, kMaxDim + 1> spaces;
  std::call_once(flags[dim][rank], [&] { spaces[dim][rank].reset(new IndexSpace(dim, rank)); });
  return *spaces[dim][rank];
}

std::size_t IndexSpace::position(const int* alpha) const {
  const auto& c = binom_table().c;
  std::size_t pos = 0;
  int remaining = rank_;
  for (int i = 0; i + 1 < dim_; ++i) {
    const int m = dim_ - i - 1;
    if (alpha[i] > 0) pos += c[remaining + m][m] - c[remaining - alpha[i] + m][m];
    remaining -= alpha[i];
  }
  return pos;
}

TensorF q_of_subspace(const Eigen::MatrixXd& basis) {
  const int n = static_cast<int>(basis.rows());
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  if (gram.size() > 0 &&
      (gram - Eigen::MatrixXd::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("q_of_subspace: basis is not orthonormal");
  TensorF q(n, 2);
  for (Eigen::Index b = 0; b < basis.cols(); ++b) q += vec_pow(Eigen::VectorXd(basis.col(b)), 2);
  return q;
}

TensorF vec_pow(const Eigen::VectorXd& x, int p) {
  const int n = static_cast<int>(x.size());
  TensorF out(n, p);
  const IndexSpace& sp = out.space();
  const double pf = factorial_d(p);
  for (std::size_t i = 0; i < sp.size(); ++i) {
    auto a = sp.alpha(i);
    double v = pf;
    for (int d = 0; d < n; ++d) {
      if (a[d] == 0) continue;
      v *= std::pow(x[d], a[d]) / factorial_d(a[d]);
    }
    out[i] = v;
  }
  return out;
}

TensorQ vec_pow(const std::vector<Rational>& x, int p) {
  const int n = static_cast<int>(x.size());
  TensorQ out(n, p);
  const IndexSpace& sp = out.space();
  for (std::size_t i = 0; i < sp.size(); ++i) {
    auto a = sp.alpha(i);
    Rational v = factorial(p);
    for (int d = 0; d < n; ++d) {
      Rational pw(1);
      for (int e = 0; e < a[d]; ++e) pw *= x[d];
      v *= pw / factorial(a[d]);
    }
    out[i] = v;
  }
  return out;
}

double max_abs(const TensorF& a) {
  double m = 0.0;
  for (double v : a.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const TensorF& a, const TensorF& b) {
  a.check_same_shape(b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool approx_eq(const TensorF& a, const TensorF& b, double tol) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  return max_abs_diff(a, b) <= tol;
}

TensorF to_float(const TensorQ& a) {
  TensorF out(a.dim(), a.rank());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].get_d();
  return out;
}

TensorQ to_exact(const TensorF& a) {
  TensorQ out(a.dim(), a.rank());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rational(a[i]);
  return out;
}

double component(const TensorF& a, std::span<const int> indices) {
  if (static_cast<int>(indices.size()) != a.rank())
    throw std::invalid_argument("component: wrong number of indices");
  int alpha[IndexSpace::kMaxDim] = {};
  for (int i : indices) {
    if (i < 0 || i >= a.dim()) throw std::out_of_range("component: index out of range");
    ++alpha[i];
  }
  double w = 1.0;
  for (int d = 0; d < a.dim(); ++d) w *= factorial_d(alpha[d]);
  return a[a.space().position(alpha)] * w / factorial_d(a.rank());
}

TensorF pushforward(const TensorF& a, const Eigen::MatrixXd& basis) {
  if (basis.cols() != a.dim()) throw std::invalid_argument("pushforward: basis has wrong column count");
  const int n = static_cast<int>(basis.rows());
  std::vector<std::vector<TensorF>> powers(a.dim());
  for (int c = 0; c < a.dim(); ++c) {
    powers[c].push_back(TensorF::scalar(n, 1.0));
    for (int e = 1; e <= a.rank(); ++e)
      powers[c].push_back(sym_mul(powers[c].back(), vec_pow(Eigen::VectorXd(basis.col(c)), 1)));
  }
  TensorF out(n, a.rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    auto alpha = a.space().alpha(i);
    TensorF term = TensorF::scalar(n, a[i]);
    for (int c = 0; c < a.dim(); ++c)
      if (alpha[c] > 0) term = sym_mul(term, powers[c][alpha[c]]);
    out += term;
  }
  return out;
}

}  // namespace crofton
