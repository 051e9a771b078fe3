#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "crofton/exact.hpp"

namespace crofton {

// All multi-indices alpha with |alpha| = rank and length dim, in ascending
// lexicographic order. Instances are cached and immutable.
class IndexSpace {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr int kMaxRank = 40;

  static const IndexSpace& get(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t size() const { return size_; }
  std::span<const int> alpha(std::size_t pos) const {
    return {exps_.data() + pos * dim_, static_cast<std::size_t>(dim_)};
  }
  std::size_t position(const int* alpha) const;

 private:
  IndexSpace(int dim, int rank);
  int dim_, rank_;
  std::size_t size_;
  std::vector<int> exps_;
};

std::size_t count_multi_indices(int dim, int rank);

// Symmetric tensor of rank p over R^n stored as the coefficients of the
// polynomial t -> T(t, ..., t). The component T_{i1..ip} equals coeff(alpha) * alpha!/p!.
template <class T>
class SymTensor {
 public:
  SymTensor() : SymTensor(1, 0) {}
  SymTensor(int dim, int rank)
      : space_(&IndexSpace::get(dim, rank)), coeffs_(space_->size(), T(0)) {}

  static SymTensor scalar(int dim, T v) {
    SymTensor s(dim, 0);
    s.coeffs_[0] = v;
    return s;
  }

  int dim() const { return space_->dim(); }
  int rank() const { return space_->rank(); }
  std::size_t size() const { return coeffs_.size(); }
  const IndexSpace& space() const { return *space_; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T& operator[](std::size_t pos) { return coeffs_[pos]; }
  const T& operator[](std::size_t pos) const { return coeffs_[pos]; }

  T& coeff(std::initializer_list<int> alpha) { return coeffs_[checked_position(alpha)]; }
  const T& coeff(std::initializer_list<int> alpha) const { return coeffs_[checked_position(alpha)]; }
  const T& coeff(std::span<const int> alpha) const { return coeffs_[checked_position(alpha)]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  // Value of the rank-0 tensor.
  const T& value() const {
    if (rank() != 0) throw std::logic_error("SymTensor::value on a tensor of positive rank");
    return coeffs_[0];
  }

  SymTensor& operator+=(const SymTensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  SymTensor& operator-=(const SymTensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  SymTensor& operator*=(const T& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }
  // Accumulate c * o without temporaries.
  void add_scaled(const SymTensor& o, const T& c) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += c * o.coeffs_[i];
  }

  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, const T& c) { return a *= c; }
  friend SymTensor operator*(const T& c, SymTensor a) { return a *= c; }
  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

  void check_same_shape(const SymTensor& o) const {
    if (space_ != o.space_) throw std::invalid_argument("SymTensor: dimension or rank mismatch");
  }

 private:
  template <class Seq>
  std::size_t checked_position(const Seq& alpha) const {
    if (static_cast<int>(alpha.size()) != dim())
      throw std::invalid_argument("SymTensor: multi-index has wrong length");
    int buf[IndexSpace::kMaxDim];
    int total = 0, i = 0;
    for (int a : alpha) {
      if (a < 0) throw std::invalid_argument("SymTensor: negative exponent");
      buf[i++] = a;
      total += a;
    }
    if (total != rank()) throw std::invalid_argument("SymTensor: multi-index has wrong order");
    return space_->position(buf);
  }

  const IndexSpace* space_;
  std::vector<T> coeffs_;
};

using TensorF = SymTensor<double>;
using TensorQ = SymTensor<Rational>;

template <class T>
SymTensor<T> sym_mul(const SymTensor<T>& a, const SymTensor<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sym_mul: dimension mismatch");
  const int n = a.dim();
  SymTensor<T> out(n, a.rank() + b.rank());
  const IndexSpace& sa = a.space();
  const IndexSpace& sb = b.space();
  const IndexSpace& so = out.space();
  int buf[IndexSpace::kMaxDim];
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (a[i] == 0) continue;
    auto ai = sa.alpha(i);
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (b[j] == 0) continue;
      auto bj = sb.alpha(j);
      for (int d = 0; d < n; ++d) buf[d] = ai[d] + bj[d];
      out[so.position(buf)] += a[i] * b[j];
    }
  }
  return out;
}

template <class T>
SymTensor<T> sym_pow(const SymTensor<T>& a, int p) {
  if (p < 0) throw std::invalid_argument("sym_pow: negative exponent");
  SymTensor<T> out = SymTensor<T>::scalar(a.dim(), T(1));
  for (int i = 0; i < p; ++i) out = sym_mul(out, a);
  return out;
}

template <class T>
SymTensor<T> q_metric(int n) {
  SymTensor<T> q(n, 2);
  std::vector<int> alpha(n, 0);
  for (int i = 0; i < n; ++i) {
    alpha.assign(n, 0);
    alpha[i] = 2;
    q[q.space().position(alpha.data())] = T(1);
  }
  return q;
}

// Q(L) for the subspace spanned by the orthonormal columns of basis.
TensorF q_of_subspace(const Eigen::MatrixXd& basis);
// The rank-p tensor with polynomial (x.t)^p.
TensorF vec_pow(const Eigen::VectorXd& x, int p);
TensorQ vec_pow(const std::vector<Rational>& x, int p);

double max_abs(const TensorF& a);
double max_abs_diff(const TensorF& a, const TensorF& b);
bool approx_eq(const TensorF& a, const TensorF& b, double tol);

TensorF to_float(const TensorQ& a);
// Exact conversion of each double to a rational.
TensorQ to_exact(const TensorF& a);

// Component T_{i1..ip} (indices in 0..n-1) of the symmetric tensor.
double component(const TensorF& a, std::span<const int> indices);

// Push a tensor over R^k forward along the columns of B (n x k): the
// polynomial p(y) becomes p(B^T x).
TensorF pushforward(const TensorF& a, const Eigen::MatrixXd& basis);

}  // namespace crofton
