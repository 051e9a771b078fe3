#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace crofton {

using Rational = mpq_class;

// A half-integer stored as twice its value: HalfInt{5} is 5/2.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt whole(int v) { return HalfInt{2 * v}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  // Non-positive integers are the poles of the Gamma function.
  constexpr bool is_pole() const { return is_integer() && twice <= 0; }
  Rational value() const { return Rational(twice, 2); }
  double to_double() const { return twice / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr HalfInt operator+(HalfInt a, int b) { return {a.twice + 2 * b}; }
  friend constexpr HalfInt operator-(HalfInt a, int b) { return {a.twice - 2 * b}; }
  friend constexpr HalfInt operator+(int a, HalfInt b) { return {2 * a + b.twice}; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;
};

// numerator/2
constexpr HalfInt half(int numerator) { return HalfInt{numerator}; }

// coeff * pi^(pi_half_exponent/2), kept canonical (zero has exponent 0).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational coeff, int pi_half_exponent = 0);
  static ExactScalar integer(long v) { return ExactScalar(Rational(v)); }
  static ExactScalar ratio(long p, long q) { return ExactScalar(Rational(p, q)); }
  static ExactScalar pi_power(int pi_half_exponent) { return ExactScalar(Rational(1), pi_half_exponent); }

  const Rational& coeff() const { return coeff_; }
  int pi_half_exponent() const { return pi_half_exponent_; }
  bool is_zero() const { return coeff_ == 0; }
  double to_double() const;
  // "p/q * pi^(m/2)", or just "p/q" when m = 0.
  std::string to_string() const;

  ExactScalar operator-() const { return ExactScalar(-coeff_, pi_half_exponent_); }
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  // Throws std::domain_error when both operands are nonzero with different pi powers.
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }

  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.coeff_ == b.coeff_ && a.pi_half_exponent_ == b.pi_half_exponent_;
  }

 private:
  void canonicalize();
  Rational coeff_{0};
  int pi_half_exponent_ = 0;
};

// Finite sum of ExactScalars with possibly different pi powers.
class ExactPolyPi {
 public:
  ExactPolyPi() = default;
  ExactPolyPi(const ExactScalar& s) { *this += s; }  // NOLINT(implicit)

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double to_double() const;
  std::string to_string() const;
  // The single term, or zero; throws if several pi powers are present.
  ExactScalar to_scalar() const;

  ExactPolyPi& operator+=(const ExactScalar& s);
  ExactPolyPi& operator+=(const ExactPolyPi& o);
  ExactPolyPi& operator-=(const ExactPolyPi& o);
  ExactPolyPi& operator*=(const ExactScalar& s);
  ExactPolyPi operator-() const;

  friend ExactPolyPi operator+(ExactPolyPi a, const ExactPolyPi& b) { return a += b; }
  friend ExactPolyPi operator-(ExactPolyPi a, const ExactPolyPi& b) { return a -= b; }
  friend ExactPolyPi operator*(ExactPolyPi a, const ExactScalar& s) { return a *= s; }
  friend ExactPolyPi operator*(const ExactScalar& s, ExactPolyPi a) { return a *= s; }
  friend ExactPolyPi operator*(const ExactPolyPi& a, const ExactPolyPi& b);
  friend bool operator==(const ExactPolyPi& a, const ExactPolyPi& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
};

Rational factorial(long n);
// C(n, k) for integers, zero outside 0 <= k <= n.
Rational binomial(long n, long k);

// Gamma(two_a / 2) for two_a >= 1.
ExactScalar gamma_half(int two_a);
// Gamma at any half-integer that is not a pole (negative half-integers included).
ExactScalar gamma(HalfInt x);
// 1/Gamma(x), entire: zero at the poles.
ExactScalar reciprocal_gamma(HalfInt x);
// Gamma(x)/Gamma(y) with the conventions Gamma(0)^{-1} = 0 and Gamma(a)/Gamma(a) = 1
// (both poles: analytic limit of the ratio). Throws if only the numerator is a pole.
ExactScalar gamma_ratio(HalfInt x, HalfInt y);
// a (a+1) ... (a+q-1), defined for every half-integer a.
ExactScalar rising_factorial(int two_a, int q);
ExactScalar rising_factorial(HalfInt a, int q);
// Gamma(x)/Gamma(x-z) = (x-z) ... (x-1).
ExactScalar falling_factorial(HalfInt x, int z);

ExactScalar omega(int m);
ExactScalar kappa_ball(int m);

struct IdentityCheck {
  ExactScalar lhs;
  ExactScalar rhs;
  bool holds() const { return lhs == rhs; }
};

IdentityCheck lemma61(int q, HalfInt a, HalfInt b);
IdentityCheck lemma62(int a);
IdentityCheck lemma63(HalfInt a, HalfInt b, HalfInt c, int z);
IdentityCheck lemma64(HalfInt a, HalfInt b, int t);

}  // namespace crofton
