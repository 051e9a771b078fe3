#include <doctest.h>

#include <cmath>
#include <random>

#include "crofton/symtensor.hpp"

using namespace crofton;

namespace {

// Value of the polynomial sum_alpha c_alpha t^alpha.
double eval(const TensorF& a, const Eigen::VectorXd& t) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto alpha = a.space().alpha(i);
    double m = a[i];
    for (int d = 0; d < a.dim(); ++d) m *= std::pow(t[d], alpha[d]);
    total += m;
  }
  return total;
}

TensorF random_tensor(std::mt19937& g, int n, int rank) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TensorF a(n, rank);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = u(g);
  return a;
}

Eigen::VectorXd random_vec(std::mt19937& g, int n) {
  std::normal_distribution<double> d;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = d(g);
  return v;
}

}  // namespace

TEST_CASE("index spaces") {
  CHECK(IndexSpace::get(3, 2).size() == 6);
  CHECK(IndexSpace::get(4, 3).size() == 20);
  CHECK(IndexSpace::get(5, 0).size() == 1);
  CHECK_THROWS_AS(IndexSpace::get(9, 1), std::out_of_range);
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= 6; ++r) {
      const auto& sp = IndexSpace::get(n, r);
      for (std::size_t i = 0; i < sp.size(); ++i) {
        CHECK(sp.position(sp.alpha(i).data()) == i);
        int sum = 0;
        for (int a : sp.alpha(i)) sum += a;
        CHECK(sum == r);
        if (i > 0) CHECK(std::lexicographical_compare(sp.alpha(i - 1).begin(), sp.alpha(i - 1).end(),
                                                      sp.alpha(i).begin(), sp.alpha(i).end()));
      }
    }
}

TEST_CASE("metric tensor and powers of vectors") {
  const TensorF q = q_metric<double>(3);
  const int ii[2] = {1, 1}, ij[2] = {0, 2};
  CHECK(component(q, ii) == 1.0);
  CHECK(component(q, ij) == 0.0);
  Eigen::VectorXd x(3);
  x << 0.5, -2.0, 3.0;
  const TensorF x3 = vec_pow(x, 3);
  const int idx[3] = {0, 1, 2}, idx2[3] = {2, 2, 1};
  CHECK(component(x3, idx) == doctest::Approx(0.5 * -2.0 * 3.0));
  CHECK(component(x3, idx2) == doctest::Approx(3.0 * 3.0 * -2.0));
}

TEST_CASE("products are products of polynomials (random property)") {
  std::mt19937 g(5);
  for (int it = 0; it < 50; ++it) {
    const int n = 1 + it % 4, ra = it % 3, rb = (it / 3) % 3;
    const TensorF a = random_tensor(g, n, ra), b = random_tensor(g, n, rb), c = random_tensor(g, n, 1);
    const Eigen::VectorXd t = random_vec(g, n);
    CHECK(eval(sym_mul(a, b), t) == doctest::Approx(eval(a, t) * eval(b, t)).epsilon(1e-10));
    CHECK(approx_eq(sym_mul(a, b), sym_mul(b, a), 1e-12));
    CHECK(approx_eq(sym_mul(sym_mul(a, b), c), sym_mul(a, sym_mul(b, c)), 1e-10));
    CHECK(eval(vec_pow(t, 3), t) == doctest::Approx(std::pow(t.squaredNorm(), 3)).epsilon(1e-10));
  }
}

TEST_CASE("Q of a subspace") {
  std::mt19937 g(9);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + it % 4, k = 1 + it % (n - 1);
    Eigen::MatrixXd m(n, k);
    for (int c = 0; c < k; ++c) m.col(c) = random_vec(g, n);
    const Eigen::MatrixXd basis = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ() * Eigen::MatrixXd::Identity(n, k);
    const Eigen::VectorXd t = random_vec(g, n);
    CHECK(eval(q_of_subspace(basis), t) == doctest::Approx((basis.transpose() * t).squaredNorm()));
  }
  CHECK(approx_eq(q_of_subspace(Eigen::MatrixXd::Identity(3, 3)), q_metric<double>(3), 1e-15));
  CHECK_THROWS_AS(q_of_subspace(2.0 * Eigen::MatrixXd::Identity(3, 1)), std::invalid_argument);
}

TEST_CASE("pushforward composes with the embedding") {
  std::mt19937 g(3);
  Eigen::MatrixXd m(4, 2);
  m.col(0) = random_vec(g, 4);
  m.col(1) = random_vec(g, 4);
  const Eigen::MatrixXd basis = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ() * Eigen::MatrixXd::Identity(4, 2);
  const TensorF a = random_tensor(g, 2, 3);
  const Eigen::VectorXd t = random_vec(g, 4);
  CHECK(eval(pushforward(a, basis), t) == doctest::Approx(eval(a, basis.transpose() * t)).epsilon(1e-10));
  CHECK(approx_eq(pushforward(q_metric<double>(2), basis), q_of_subspace(basis), 1e-12));
}

TEST_CASE("exact tensors") {
  const TensorQ q = q_metric<Rational>(2);
  const TensorQ q2 = sym_pow(q, 2);
  const TensorQ x = vec_pow(std::vector<Rational>{Rational(1, 2), Rational(1, 3)}, 2);
  CHECK(q2.coeff({2, 2}) == 2);
  CHECK(q2.coeff({4, 0}) == 1);
  CHECK(x.coeff({1, 1}) == Rational(1, 3));
  CHECK(to_float(to_exact(to_float(q2))) == to_float(q2));
  CHECK_THROWS_AS(q2.coeff({1, 1}), std::invalid_argument);
  TensorQ sum = q;
  CHECK_THROWS_AS(sum += q2, std::invalid_argument);
}
