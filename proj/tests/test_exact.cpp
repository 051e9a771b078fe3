#include <doctest.h>

#include <cmath>
#include <random>

#include "crofton/exact.hpp"

using namespace crofton;

namespace {

const double kPi = std::acos(-1.0);

// Random half-integer in [lo/2, hi/2] avoiding the poles.
HalfInt random_half(std::mt19937& g, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  for (;;) {
    HalfInt x{d(g)};
    if (!x.is_pole()) return x;
  }
}

}  // namespace

TEST_CASE("gamma at half-integers") {
  CHECK(gamma(half(1)) == ExactScalar(Rational(1), 1));
  CHECK(gamma(half(5)) == ExactScalar(Rational(3, 4), 1));
  CHECK(gamma(half(8)) == ExactScalar::integer(6));
  CHECK(gamma(half(-1)) == ExactScalar(Rational(-2), 1));
  CHECK(gamma(half(-3)) == ExactScalar(Rational(4, 3), 1));
  CHECK_THROWS_AS(gamma(half(0)), std::domain_error);
  CHECK_THROWS_AS(gamma(half(-4)), std::domain_error);
  CHECK_THROWS_AS(gamma_half(0), std::domain_error);
}

TEST_CASE("gamma agrees with tgamma") {
  for (int t = -11; t <= 60; ++t) {
    HalfInt x{t};
    if (x.is_pole()) continue;
    const double ref = std::tgamma(t / 2.0);
    CHECK(gamma(x).to_double() == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("recurrence Gamma(x+1) = x Gamma(x) on random half-integers") {
  std::mt19937 g(11);
  for (int it = 0; it < 300; ++it) {
    const HalfInt x = random_half(g, -21, 41);
    if ((x + 1).is_pole()) continue;
    CHECK(gamma(x + 1) == ExactScalar(x.value()) * gamma(x));
  }
}

TEST_CASE("reciprocal gamma is entire") {
  CHECK(reciprocal_gamma(half(0)).is_zero());
  CHECK(reciprocal_gamma(half(-6)).is_zero());
  CHECK(reciprocal_gamma(half(3)) == ExactScalar(Rational(2), -1));
}

TEST_CASE("gamma ratio conventions") {
  CHECK(gamma_ratio(half(0), half(0)) == ExactScalar::integer(1));
  CHECK(gamma_ratio(half(7), half(3)) == ExactScalar(Rational(15, 4)));
  CHECK(gamma_ratio(half(3), half(0)).is_zero());
  CHECK_THROWS_AS(gamma_ratio(half(-2), half(3)), std::domain_error);
  // limit of Gamma(-1 + e) / Gamma(-2 + e)
  const double e = 1e-7;
  const double lim = std::tgamma(-1 + e) / std::tgamma(-2 + e);
  CHECK(gamma_ratio(half(-2), half(-4)).to_double() == doctest::Approx(lim).epsilon(1e-5));
}

TEST_CASE("rising and falling factorials") {
  CHECK(rising_factorial(half(1), 3) == ExactScalar(Rational(15, 8)));
  CHECK(rising_factorial(half(-3), 2) == ExactScalar(Rational(3, 4)));
  CHECK(falling_factorial(half(10), 2) == ExactScalar::integer(12));  // Gamma(5)/Gamma(3)
  CHECK(rising_factorial(half(4), 0) == ExactScalar::integer(1));
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("sphere areas and ball volumes") {
  CHECK(omega(1) == ExactScalar::integer(2));
  CHECK(omega(2) == ExactScalar(Rational(2), 2));
  CHECK(omega(3) == ExactScalar(Rational(4), 2));
  CHECK(omega(6) == ExactScalar(Rational(1), 6));
  CHECK(kappa_ball(3) == ExactScalar(Rational(4, 3), 2));
  CHECK(kappa_ball(0) == ExactScalar::integer(1));
  for (int m = 1; m <= 12; ++m) {
    CHECK(omega(m).to_double() == doctest::Approx(2 * std::pow(kPi, m / 2.0) / std::tgamma(m / 2.0)));
    CHECK(omega(m) == ExactScalar::integer(m) * kappa_ball(m));
  }
}

TEST_CASE("exact scalar formatting and arithmetic") {
  CHECK(ExactScalar(Rational(1, 3)).to_string() == "1/3");
  CHECK(ExactScalar(Rational(3, 4), 1).to_string() == "3/4 * pi^(1/2)");
  CHECK(ExactScalar(Rational(0), 5).pi_half_exponent() == 0);
  ExactScalar a(Rational(1, 2), 1);
  CHECK_THROWS_AS(a += ExactScalar(Rational(1), 2), std::domain_error);
  a += ExactScalar(Rational(1, 2), 1);
  CHECK(a == ExactScalar::pi_power(1));
  CHECK((ExactScalar::pi_power(3) / ExactScalar::pi_power(1)) == ExactScalar::pi_power(2));
}

TEST_CASE("polynomials in pi") {
  ExactPolyPi p = ExactScalar(Rational(1), 0);
  p += ExactScalar(Rational(2), 2);
  CHECK(p.terms().size() == 2);
  CHECK_THROWS(p.to_scalar());
  CHECK(p.to_double() == doctest::Approx(1 + 2 * kPi));
  p -= ExactPolyPi(ExactScalar(Rational(1), 0));
  CHECK(p.to_scalar() == ExactScalar(Rational(2), 2));
  CHECK((p - p).is_zero());
  const ExactPolyPi sq = p * p;
  CHECK(sq.to_scalar() == ExactScalar(Rational(4), 4));
}

TEST_CASE("gamma identities on small grids") {
  for (int q = 0; q <= 4; ++q)
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b) CHECK(lemma61(q, half(a), half(b)).holds());
  for (int a = 0; a <= 10; ++a) CHECK(lemma62(a).holds());
  CHECK(lemma63(half(8), half(1), half(4), 2).holds());  // Gamma(0) appears in a denominator
  for (int t = 1; t <= 4; ++t) CHECK(lemma64(half(3), half(5), t).holds());
  CHECK_THROWS_AS(lemma61(1, half(0), half(1)), std::domain_error);
  CHECK_THROWS_AS(lemma63(half(2), half(1), half(1), 1), std::domain_error);
}

TEST_CASE("Lemma identities agree with a floating point evaluation") {
  // a = 5/2, b = 7/2, q = 3 through tgamma
  double lhs = 0;
  for (int y = 0; y <= 3; ++y)
    lhs += (y % 2 ? -1 : 1) * std::tgamma(4.0) / (std::tgamma(y + 1.0) * std::tgamma(4.0 - y)) *
           std::tgamma(2.5 + y) / std::tgamma(3.5 + y);
  const auto check = lemma61(3, half(5), half(7));
  CHECK(check.lhs.to_double() == doctest::Approx(lhs).epsilon(1e-12));
}
