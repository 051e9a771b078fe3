#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "crofton/grassmann.hpp"

using namespace crofton;

namespace {

const double kPi = std::acos(-1.0);

MCSettings quick(std::size_t samples = 20000, std::uint64_t seed = 11) {
  MCSettings mc;
  mc.samples = samples;
  mc.seed = seed;
  return mc;
}

Mat col(std::initializer_list<double> v) {
  Mat m(static_cast<int>(v.size()), 1);
  int i = 0;
  for (double x : v) m(i++, 0) = x;
  return m;
}

}  // namespace

TEST_CASE("stream seeds differ per worker and are stable") {
  CHECK(stream_seed(1, 0) != stream_seed(1, 1));
  CHECK(stream_seed(1, 0) != stream_seed(2, 0));
  CHECK(stream_seed(42, 3) == stream_seed(42, 3));
}

TEST_CASE("Grassmann samples are orthonormal") {
  Stream st(3);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t < 10; ++t) {
        const Mat b = sample_grassmann(n, k, st);
        CHECK(b.rows() == n);
        CHECK(b.cols() == k);
        CHECK((b.transpose() * b - Mat::Identity(k, k)).norm() < 1e-10);
      }
  CHECK_THROWS(sample_grassmann(3, 4, st));
}

TEST_CASE("lines in the plane have uniform angle (Kolmogorov-Smirnov)") {
  Stream st(17);
  const int m = 4000;
  std::vector<double> angles;
  for (int t = 0; t < m; ++t) {
    const Mat b = sample_grassmann(2, 1, st);
    double a = std::atan2(b(1, 0), b(0, 0));
    if (a < 0) a += kPi;
    if (a >= kPi) a -= kPi;
    angles.push_back(a / kPi);
  }
  std::sort(angles.begin(), angles.end());
  double d = 0;
  for (int t = 0; t < m; ++t) d = std::max({d, std::abs(angles[t] - double(t) / m), std::abs(angles[t] - double(t + 1) / m)});
  // 1% critical value
  CHECK(d < 1.63 / std::sqrt(m));
}

TEST_CASE("flat samples") {
  Stream st(5);
  const Vec c = Vec::Constant(3, 0.5);
  for (int k = 1; k <= 2; ++k)
    for (int t = 0; t < 50; ++t) {
      const FlatSample f = sample_flat_hitting_ball(3, k, 2.0, c, st);
      CHECK((f.frame.basis.transpose() * f.frame.translation).norm() < 1e-10);
      CHECK((f.frame.basis.transpose() * f.frame.basis - Mat::Identity(k, k)).norm() < 1e-10);
      // distance from the centre to the flat is at most the radius
      const Vec d = c - f.frame.translation;
      CHECK((d - f.frame.basis * (f.frame.basis.transpose() * d)).norm() <= 2.0 + 1e-12);
      CHECK(f.weight == doctest::Approx(k == 1 ? kPi * 4 : 4.0));
    }
}

TEST_CASE("window estimator of the flats meeting a smaller ball") {
  for (int k = 1; k <= 2; ++k) {
    const int m = 3 - k;
    const double radius = 1.5, rho = 0.8;
    const Vec c = Vec::Zero(3);
    const double weight = kappa_ball(m).to_double() * std::pow(radius, m);
    auto draw = [&](Stream& st) {
      const FlatSample f = sample_flat_hitting_ball(3, k, radius, c, st);
      return TensorF::scalar(3, f.frame.translation.norm() < rho ? 1.0 : 0.0);
    };
    const MCEstimate est = run_mc(3, 0, 20000, 8, 1, weight, draw);
    const double expected = kappa_ball(m).to_double() * std::pow(rho, m);
    CHECK(std::abs(est.mean.value() - expected) <= 3 * est.stderr_[0]);
  }
}

TEST_CASE("generalized sine") {
  const Mat e1 = col({1, 0, 0}), e2 = col({0, 1, 0}), e3 = col({0, 0, 1});
  Mat plane12(3, 2);
  plane12 << e1, e2;
  CHECK(generalized_sine(e1, e1) == doctest::Approx(1.0));
  CHECK(generalized_sine(e1, e2) == doctest::Approx(1.0));
  CHECK(generalized_sine(e3, plane12) == doctest::Approx(1.0));
  for (double th : {0.1, 0.7, 1.3}) {
    const Mat line = col({std::cos(th), 0, std::sin(th)});
    CHECK(generalized_sine(line, plane12) == doctest::Approx(std::sin(th)));
    const Mat l2 = col({std::cos(th), std::sin(th)});
    CHECK(generalized_sine(col({1, 0}), l2) == doctest::Approx(std::sin(th)));
  }
  // two planes in R^3 sharing a line: angle between their normals
  Mat tilted(3, 2);
  tilted << e1, col({0, std::cos(0.4), std::sin(0.4)});
  CHECK(generalized_sine(plane12, tilted) == doctest::Approx(std::sin(0.4)));
  // continuity as the configuration degenerates
  double prev = 1.0;
  for (double th : {0.3, 0.1, 0.01, 0.001}) {
    const double v = generalized_sine(col({std::cos(th), 0, std::sin(th)}), plane12);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 2e-3);
}

TEST_CASE("generalized sine stays in [0, 1] for random subspaces") {
  Stream st(23);
  for (int n = 2; n <= 5; ++n)
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        for (int t = 0; t < 10; ++t) {
          const double v = generalized_sine(sample_grassmann(n, a, st), sample_grassmann(n, b, st));
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
}

TEST_CASE("Monte Carlo runs are deterministic") {
  auto draw = [](Stream& st) {
    std::normal_distribution<double> g;
    return TensorF::scalar(2, g(st));
  };
  const MCEstimate a = run_mc(2, 0, 1000, 9, 3, 1.0, draw);
  const MCEstimate b = run_mc(2, 0, 1000, 9, 3, 1.0, draw);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  CHECK(a.samples == 1000);
  const MCEstimate c = run_mc(2, 0, 1000, 9, 1, 1.0, draw);
  CHECK(std::abs(c.mean.value()) < 5 * c.stderr_[0]);
  CHECK(c.stderr_[0] == doctest::Approx(1 / std::sqrt(1000.0)).epsilon(0.1));
}

TEST_CASE("comparison report") {
  MCEstimate est;
  est.mean = TensorF::scalar(3, 1.0);
  est.stderr_ = {0.1};
  ComparisonReport r = compare("x", est, TensorF::scalar(3, 1.3));
  CHECK(r.z_max == doctest::Approx(3.0));
  CHECK(r.pass);
  r = compare("x", est, TensorF::scalar(3, 1.5));
  CHECK_FALSE(r.pass);
  est.stderr_ = {0.0};
  CHECK(compare("x", est, TensorF::scalar(3, 1.0)).pass);
  CHECK_FALSE(compare("x", est, TensorF::scalar(3, 1.0 + 1e-9)).pass);
  CHECK_THROWS(compare("x", est, TensorF(3, 1)));
}

TEST_CASE("mean metric of a random subspace") {
  for (int k = 1; k <= 2; ++k) {
    const ComparisonReport r = check_lemma_Q_power(3, k, 1, quick());
    CHECK(r.pass);
    CHECK(r.rhs.coeff({2, 0, 0}) == doctest::Approx(k / 3.0));
  }
  CHECK(check_lemma_Q_power(4, 2, 2, quick()).pass);
  CHECK(lemma_Q_power_rhs(3, 0, 1).is_zero());
}

TEST_CASE("sine-weighted metric integrals") {
  Mat f(3, 2);
  f << 1, 0, 0, 1, 0, 0;
  CHECK(check_lemma_sine_Q(3, 2, 2, 1, f, quick()).pass);
  CHECK(check_lemma_sine_Q(3, 2, 2, 0, f, quick()).pass);
  // F = R^n: [F, L] = 1
  CHECK(approx_eq(lemma_sine_Q_rhs(3, 1, 3, 1, Mat::Identity(3, 3)), lemma_Q_power_rhs(3, 1, 1), 1e-12));
}

TEST_CASE("direction integrals behind the local formulas") {
  Mat f(3, 2);
  f << 1, 0, 0, 1, 0, 0;
  Vec u(3);
  u << 0, 0, 1;
  for (int s = 0; s <= 2; ++s) CHECK(check_prop_integrand(3, 2, 1, s, 1, f, u, quick()).pass);
  for (int s = 0; s <= 3; ++s) CHECK(check_prop_integrand(3, 1, 0, s, 0, f, u, quick()).pass);
  CHECK_THROWS(check_prop_integrand(3, 2, 1, 0, 0, f, Vec(Vec::Ones(3)), quick()));
}

TEST_CASE("end-to-end: slice areas integrate to the volume") {
  const Polytope c = catalog("cube", 3);
  CroftonQuery q;
  q.formula = Formula::thm_j_eq_k;
  q.params.n = 3;
  q.params.k = 2;
  const VerificationReport rep = verify(c, q, quick(20000, 3));
  CHECK(rep.comparison.rhs.value() == doctest::Approx(1.0));
  CHECK(rep.comparison.pass);
  CHECK(rep.params.j == 2);
}

TEST_CASE("end-to-end: rotating the body rotates both sides") {
  Stream st(31);
  const Mat rot = sample_grassmann(3, 3, st);
  const Polytope c = catalog("simplex", 3);
  const Polytope moved = c.transformed(rot, Vec::Constant(3, 0.25));
  CroftonQuery q;
  q.formula = Formula::thm_k1_local;
  q.params.n = 3;
  q.params.s = 2;
  const VerificationReport a = verify(c, q, quick(20000, 4));
  const VerificationReport b = verify(moved, q, quick(20000, 5));
  CHECK(a.comparison.pass);
  CHECK(b.comparison.pass);
  CHECK(approx_eq(pushforward(a.comparison.rhs, rot), b.comparison.rhs, 1e-10));
}

TEST_CASE("verify rejects boxes for global formulas") {
  const Polytope c = catalog("cube", 3);
  const Box box = Box::everything(3);
  CroftonQuery q;
  q.formula = Formula::cor_i0;
  q.params.n = 3;
  q.params.k = 2;
  q.params.j = 1;
  q.box = &box;
  CHECK_THROWS_AS(verify(c, q, quick(10)), PreconditionError);
}
