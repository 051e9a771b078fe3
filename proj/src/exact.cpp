#include "crofton/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace crofton {

ExactScalar::ExactScalar(Rational coeff, int pi_half_exponent)
    : coeff_(std::move(coeff)), pi_half_exponent_(pi_half_exponent) {
  canonicalize();
}

void ExactScalar::canonicalize() {
  coeff_.canonicalize();
  if (coeff_ == 0) pi_half_exponent_ = 0;
}

double ExactScalar::to_double() const {
  if (is_zero()) return 0.0;
  return coeff_.get_d() * std::pow(std::numbers::pi, pi_half_exponent_ / 2.0);
}

std::string ExactScalar::to_string() const {
  std::string s = coeff_.get_str();
  if (pi_half_exponent_ != 0) s += " * pi^(" + std::to_string(pi_half_exponent_) + "/2)";
  return s;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  coeff_ *= o.coeff_;
  pi_half_exponent_ += o.pi_half_exponent_;
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  coeff_ /= o.coeff_;
  pi_half_exponent_ -= o.pi_half_exponent_;
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (pi_half_exponent_ != o.pi_half_exponent_)
    throw std::domain_error("ExactScalar: adding values with different powers of pi");
  coeff_ += o.coeff_;
  canonicalize();
  return *this;
}

double ExactPolyPi::to_double() const {
  double v = 0.0;
  for (const auto& [m, c] : terms_) v += ExactScalar(c, m).to_double();
  return v;
}

std::string ExactPolyPi::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += ExactScalar(c, m).to_string();
  }
  return out;
}

ExactScalar ExactPolyPi::to_scalar() const {
  if (terms_.empty()) return {};
  if (terms_.size() > 1) throw std::domain_error("ExactPolyPi: mixed powers of pi");
  return ExactScalar(terms_.begin()->second, terms_.begin()->first);
}

ExactPolyPi& ExactPolyPi::operator+=(const ExactScalar& s) {
  if (s.is_zero()) return *this;
  auto& c = terms_[s.pi_half_exponent()];
  c += s.coeff();
  c.canonicalize();
  if (c == 0) terms_.erase(s.pi_half_exponent());
  return *this;
}

ExactPolyPi& ExactPolyPi::operator+=(const ExactPolyPi& o) {
  for (const auto& [m, c] : o.terms_) *this += ExactScalar(c, m);
  return *this;
}

ExactPolyPi& ExactPolyPi::operator-=(const ExactPolyPi& o) { return *this += -o; }

ExactPolyPi& ExactPolyPi::operator*=(const ExactScalar& s) {
  ExactPolyPi out;
  for (const auto& [m, c] : terms_) out += ExactScalar(c, m) * s;
  return *this = std::move(out);
}

ExactPolyPi ExactPolyPi::operator-() const {
  ExactPolyPi out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

ExactPolyPi operator*(const ExactPolyPi& a, const ExactPolyPi& b) {
  ExactPolyPi out;
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) out += ExactScalar(c1 * c2, m1 + m2);
  return out;
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

namespace {

// Gamma at a positive half-integer.
ExactScalar gamma_positive(HalfInt x) {
  if (x.is_integer()) return ExactScalar(factorial(x.twice / 2 - 1));
  const long m = (x.twice - 1) / 2;  // x = m + 1/2
  Rational c = factorial(2 * m) / (factorial(m) * Rational(mpz_class(1) << (2 * m)));
  return ExactScalar(c, 1);
}

}  // namespace

ExactScalar gamma_half(int two_a) {
  if (two_a <= 0) throw std::domain_error("gamma_half: argument must be positive");
  return gamma_positive(HalfInt{two_a});
}

ExactScalar rising_factorial(HalfInt a, int q) {
  if (q < 0) throw std::domain_error("rising_factorial: negative length");
  Rational p(1);
  for (int i = 0; i < q; ++i) p *= (a + i).value();
  return ExactScalar(p);
}

ExactScalar rising_factorial(int two_a, int q) { return rising_factorial(HalfInt{two_a}, q); }

ExactScalar falling_factorial(HalfInt x, int z) { return rising_factorial(x - z, z); }

ExactScalar gamma(HalfInt x) {
  if (x.is_pole()) throw std::domain_error("gamma: pole at a non-positive integer");
  if (x.twice > 0) return gamma_positive(x);
  // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)) with x + m = 1/2.
  const int m = (1 - x.twice) / 2;
  return gamma_positive(x + m) / rising_factorial(x, m);
}

ExactScalar reciprocal_gamma(HalfInt x) {
  if (x.is_pole()) return {};
  return ExactScalar::integer(1) / gamma(x);
}

ExactScalar gamma_ratio(HalfInt x, HalfInt y) {
  if (x.is_pole() && y.is_pole()) {
    // lim Gamma(-m + e) / Gamma(-n + e) = (-1)^(n-m) n! / m!
    const long m = -x.twice / 2, n = -y.twice / 2;
    Rational v = factorial(n) / factorial(m);
    if ((n - m) % 2 != 0) v = -v;
    return ExactScalar(v);
  }
  if (y.is_pole()) return {};
  if (x.is_pole()) throw std::domain_error("gamma_ratio: pole in the numerator");
  if ((x - y).is_integer()) {
    const int d = (x - y).twice / 2;
    return d >= 0 ? rising_factorial(y, d) : ExactScalar::integer(1) / rising_factorial(x, -d);
  }
  return gamma(x) * reciprocal_gamma(y);
}

ExactScalar omega(int m) {
  if (m < 1) throw std::domain_error("omega: dimension must be at least 1");
  return ExactScalar(Rational(2), m) / gamma(half(m));
}

ExactScalar kappa_ball(int m) {
  if (m < 0) throw std::domain_error("kappa_ball: negative dimension");
  return ExactScalar::pi_power(m) / gamma(half(m) + 1);
}

namespace {

ExactScalar sign(long k) { return ExactScalar::integer(k % 2 == 0 ? 1 : -1); }
ExactScalar exact(const Rational& r) { return ExactScalar(r); }

}  // namespace

IdentityCheck lemma61(int q, HalfInt a, HalfInt b) {
  if (q < 0 || a.twice <= 0 || b.twice <= 0)
    throw std::domain_error("lemma61 requires q >= 0 and a, b > 0");
  ExactPolyPi lhs;
  for (int y = 0; y <= q; ++y) lhs += sign(y) * exact(binomial(q, y)) * gamma(a + y) / gamma(b + y);
  ExactScalar rhs = gamma(a) / gamma(b + q) * rising_factorial(b - a, q);
  return {lhs.to_scalar(), rhs};
}

IdentityCheck lemma62(int a) {
  if (a < 0) throw std::domain_error("lemma62 requires a >= 0");
  ExactPolyPi lhs;
  for (int q = 0; q <= a; ++q) lhs += sign(q) / (gamma(half(2 * (a - q) + 1)) * exact(factorial(q)));
  ExactScalar rhs = sign(a) / (ExactScalar::pi_power(1) * exact(Rational(1 - 2 * a) * factorial(a)));
  return {lhs.to_scalar(), rhs};
}

IdentityCheck lemma63(HalfInt a, HalfInt b, HalfInt c, int z) {
  if (z < 0 || a <= HalfInt::whole(z) || b.twice <= 0)
    throw std::domain_error("lemma63 requires a > z >= 0 and b > 0");
  ExactPolyPi lhs;
  for (int j = 0; j <= z; ++j) {
    lhs += sign(j) * exact(binomial(z, j)) * gamma(a - j) * gamma(b + (z - j)) *
           reciprocal_gamma(c - j) * reciprocal_gamma(a + b - c + (1 - j));
  }
  ExactScalar rhs = sign(z) * gamma(a - z) * gamma(b) * reciprocal_gamma(a + b - c + 1) *
                    reciprocal_gamma(c) * falling_factorial(a - c + 1, z) *
                    falling_factorial(c - b, z);
  return {lhs.to_scalar(), rhs};
}

IdentityCheck lemma64(HalfInt a, HalfInt b, int t) {
  if (t < 1 || a.twice <= 0 || b.twice <= 0)
    throw std::domain_error("lemma64 requires a, b > 0 and t >= 1");
  ExactPolyPi lhs;
  for (int j = 0; j <= t; ++j) {
    lhs += sign(j) / exact((b + j).value()) * exact(binomial(t, j)) * gamma(a + (t + j)) /
           gamma(a + (1 + j));
  }
  ExactScalar rhs = rising_factorial(a - b + 1, t - 1) * gamma(b) * exact(factorial(t)) /
                    gamma(b + (t + 1));
  return {lhs.to_scalar(), rhs};
}

}  // namespace crofton
