#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "crofton/measures.hpp"

namespace crofton {

namespace {

double binom_d(int n, int k) { return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0))); }

// Integral over the arc t in [0, theta] of (cos t a + sin t b)^s.
TensorF arc_moment(const Vec& a, const Vec& b, double theta, int s) {
  const int n = static_cast<int>(a.size());
  TensorF out(n, s);
  for (int m = 0; m <= s; ++m) {
    auto f = [&](double t) { return std::pow(std::cos(t), s - m) * std::pow(std::sin(t), m); };
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, theta, 15, 1e-14);
    out.add_scaled(sym_mul(vec_pow(a, s - m), vec_pow(b, m)), binom_d(s, m) * integral);
  }
  return out;
}

// Rejection sampling on the unit sphere of the cone's span.
TensorF sampled_moment(const NormalCone& cone, int s, const ConeOptions& opts) {
  const Mat& span = cone.subspace_basis;
  const int n = static_cast<int>(span.rows());
  const int d = static_cast<int>(span.cols());
  std::optional<double> exact_angle;
  if (d == 3) {
    std::vector<Eigen::Vector3d> rays;
    for (const auto& g : cone.generators) rays.push_back((span.transpose() * g).normalized());
    exact_angle = solid_angle_3d(rays);
    if (s == 0) return TensorF::scalar(n, *exact_angle);
  }
  const double sphere = omega(d).to_double();
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  const IndexSpace& space = IndexSpace::get(n, s);
  std::vector<double> sum(space.size(), 0.0), sum_sq(space.size(), 0.0);
  std::size_t total = 0, hits = 0;
  const std::size_t batch = 20000;
  Vec z(d);
  while (total < opts.max_samples) {
    for (std::size_t b = 0; b < batch; ++b, ++total) {
      for (int i = 0; i < d; ++i) z[i] = gauss(rng);
      const Vec u = span * z.normalized();
      bool inside = true;
      for (const auto& h : cone.halfspaces)
        if (u.dot(h) > 1e-12) {
          inside = false;
          break;
        }
      if (!inside) continue;
      ++hits;
      const TensorF p = vec_pow(u, s);
      for (std::size_t i = 0; i < p.size(); ++i) {
        sum[i] += p[i];
        sum_sq[i] += p[i] * p[i];
      }
    }
    // Estimator: exact angle times the conditional mean, or sphere area times the raw mean.
    double worst = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      double se;
      if (exact_angle) {
        if (hits < 2) {
          worst = INFINITY;
          break;
        }
        const double mean = sum[i] / hits;
        const double var = std::max(sum_sq[i] / hits - mean * mean, 0.0);
        se = *exact_angle * std::sqrt(var / hits);
      } else {
        const double mean = sum[i] / total;
        const double var = std::max(sum_sq[i] / total - mean * mean, 0.0);
        se = sphere * std::sqrt(var / total);
      }
      worst = std::max(worst, se);
    }
    if (worst <= opts.target_stderr) break;
  }
  TensorF out(n, s);
  for (std::size_t i = 0; i < space.size(); ++i)
    out[i] = exact_angle ? (hits ? *exact_angle * sum[i] / hits : 0.0) : sphere * sum[i] / total;
  return out;
}

}  // namespace

double solid_angle_3d(const std::vector<Eigen::Vector3d>& rays) {
  if (rays.size() < 3) return 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  for (const auto& r : rays) axis += r;
  axis.normalize();
  Eigen::Vector3d e1 = (rays[0] - rays[0].dot(axis) * axis).normalized();
  Eigen::Vector3d e2 = axis.cross(e1);
  std::vector<std::pair<double, Eigen::Vector3d>> sorted;
  for (const auto& r : rays) sorted.emplace_back(std::atan2(r.dot(e2), r.dot(e1)), r);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double total = 0.0;
  const Eigen::Vector3d& a = sorted[0].second;
  for (std::size_t i = 1; i + 1 < sorted.size(); ++i) {
    const Eigen::Vector3d& b = sorted[i].second;
    const Eigen::Vector3d& c = sorted[i + 1].second;
    const double num = std::abs(a.dot(b.cross(c)));
    const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    total += 2.0 * std::atan2(num, den);
  }
  return total;
}

TensorF full_sphere_moment(int m, int q, const Mat& basis) {
  const int n = static_cast<int>(basis.rows());
  if (m < 1 || basis.cols() != m) throw std::invalid_argument("full_sphere_moment: basis must have m columns");
  if (q % 2 != 0) return TensorF(n, q);
  const double c = 2.0 * (omega(m + q) / omega(q + 1)).to_double();
  return sym_pow(q_of_subspace(basis), q / 2) * c;
}

TensorF half_sphere_moment(const Vec& nu, const Mat& w_basis, int s) {
  const int n = static_cast<int>(nu.size());
  const int m = static_cast<int>(w_basis.cols());
  if (m == 0) return vec_pow(nu, s);
  TensorF out(n, s);
  for (int q = 0; q <= s; q += 2) {
    // int_0^1 t^(s-q) (1-t^2)^((q+m-2)/2) dt
    const double x = (s - q + 1) / 2.0, y = (q + m) / 2.0;
    const double radial = 0.5 * std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
    out.add_scaled(sym_mul(vec_pow(nu, s - q), full_sphere_moment(m, q, w_basis)), binom_d(s, q) * radial);
  }
  return out;
}

NormalCone embed_cone(const NormalCone& cone, const Mat& basis) {
  NormalCone out;
  out.face_dim = cone.face_dim;
  for (const auto& g : cone.generators) out.generators.push_back(basis * g);
  out.subspace_basis = basis * cone.subspace_basis;
  for (const auto& h : cone.halfspaces) out.halfspaces.push_back(basis * h);
  return out;
}

TensorF cone_sphere_moment(const NormalCone& cone, int s, const ConeOptions& opts) {
  const int d = static_cast<int>(cone.subspace_basis.cols());
  if (d == 0) throw std::invalid_argument("cone_sphere_moment: zero-dimensional cone");
  if (d == 1) return vec_pow(cone.generators.at(0), s);
  if (d == 2) {
    const Vec& a = cone.generators.at(0);
    const Vec& g = cone.generators.at(1);
    const double c = std::clamp(a.dot(g), -1.0, 1.0);
    const Vec b = (g - c * a).normalized();
    return arc_moment(a, b, std::acos(c), s);
  }
  return sampled_moment(cone, s, opts);
}

}  // namespace crofton
