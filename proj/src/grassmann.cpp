#include "crofton/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace crofton {

namespace {

Mat orthonormal_columns(const Mat& m, double tol) {
  if (m.cols() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Basis of (span F) intersected with the orthogonal complement of span I.
Mat extension(const Mat& f, const Mat& inter) {
  const Mat projected = f - inter * (inter.transpose() * f);
  Eigen::JacobiSVD<Mat> svd(projected, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(f.cols() - inter.cols());
}

struct Accumulator {
  std::size_t count = 0;
  std::vector<double> mean, m2;

  explicit Accumulator(std::size_t size) : mean(size, 0.0), m2(size, 0.0) {}

  void push(const TensorF& x) {
    ++count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d / count;
      m2[i] += d * (x[i] - mean[i]);
    }
  }
  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    const double na = count, nb = o.count, n = na + nb;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = o.mean[i] - mean[i];
      mean[i] += d * nb / n;
      m2[i] += o.m2[i] + d * d * na * nb / n;
    }
    count += o.count;
  }
};

TensorF q_pow(int n, int p) { return sym_pow(q_metric<double>(n), p); }

// Evaluates a coefficient table with phi_order^{r,t,eps} replaced by u^t Q(F)^eps.
TensorF table_on_direction(const CoefficientTable& table, const Vec& u, const TensorF& qf) {
  const int n = static_cast<int>(u.size());
  const Params& p = table.params;
  TensorF total(n, p.s + 2 * p.i);
  for (const auto& [t, c] : table.by_target()) {
    TensorF term = sym_mul(q_pow(n, t.q_power), vec_pow(u, t.s));
    if (t.eps) term = sym_mul(term, qf);
    total.add_scaled(term, c.to_double());
  }
  return total;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, int worker) {
  // splitmix64 finalizer over a combination of both inputs
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(worker) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat sample_grassmann(int n, int k, Stream& stream) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_grassmann: need 0 <= k <= n");
  if (k == 0) return Mat(n, 0);
  std::normal_distribution<double> gauss;
  for (;;) {
    Mat g(n, k);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < n; ++r) g(r, c) = gauss(stream);
    Eigen::HouseholderQR<Mat> qr(g);
    const Mat rr = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    bool ok = true;
    for (int i = 0; i < k; ++i)
      if (std::abs(rr(i, i)) < 1e-10) ok = false;
    if (!ok) continue;
    return qr.householderQ() * Mat::Identity(n, k);
  }
}

FlatSample sample_flat_hitting_ball(int n, int k, double radius, const Vec& center, Stream& stream) {
  FlatSample out;
  out.frame.n = n;
  out.frame.k = k;
  out.frame.basis = sample_grassmann(n, k, stream);
  const int m = n - k;
  Eigen::JacobiSVD<Mat> svd(out.frame.basis, Eigen::ComputeFullU);
  const Mat perp = svd.matrixU().rightCols(m);
  // uniform point in the m-ball: Gaussian direction, radius R * U^(1/m)
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vec dir(m);
  for (int i = 0; i < m; ++i) dir[i] = gauss(stream);
  const double rho = radius * std::pow(unif(stream), 1.0 / m);
  const Vec offset = dir.normalized() * rho;
  out.frame.translation = perp * (perp.transpose() * center + offset);
  out.weight = kappa_ball(m).to_double() * std::pow(radius, m);
  return out;
}

double generalized_sine(const Mat& f, const Mat& l) {
  const int n = static_cast<int>(f.rows());
  if (f.cols() == 0 || l.cols() == 0) return 1.0;
  Mat both(n, f.cols() + l.cols());
  both << f, -l;
  Eigen::JacobiSVD<Mat> svd(both, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<int> null_ids;
  for (int i = 0; i < both.cols(); ++i)
    if (i >= sv.size() || sv[i] < 1e-8) null_ids.push_back(i);
  Mat inter_coords(f.cols(), static_cast<int>(null_ids.size()));
  for (std::size_t c = 0; c < null_ids.size(); ++c)
    inter_coords.col(static_cast<int>(c)) = svd.matrixV().col(null_ids[c]).head(f.cols());
  const Mat inter = orthonormal_columns(f * inter_coords, 1e-8);
  const Mat ef = extension(f, inter), el = extension(l, inter);
  if (ef.cols() + el.cols() > n) return 0.0;
  Mat all(n, ef.cols() + el.cols());
  all << ef, el;
  if (all.cols() == 0) return 1.0;
  const double det = (all.transpose() * all).determinant();
  return std::clamp(std::sqrt(std::max(det, 0.0)), 0.0, 1.0);
}

MCEstimate run_mc(int dim, int rank, std::size_t samples, std::uint64_t seed, int workers, double weight,
                  const std::function<TensorF(Stream&)>& draw) {
  if (samples == 0) throw std::invalid_argument("run_mc: need at least one sample");
  workers = std::max(1, workers);
  const std::size_t size = IndexSpace::get(dim, rank).size();
  std::vector<Accumulator> acc(workers, Accumulator(size));
  std::vector<std::exception_ptr> errors(workers);
  auto job = [&](int w) {
    try {
      const std::size_t begin = samples * w / workers, end = samples * (w + 1) / workers;
      Stream stream(stream_seed(seed, w));
      for (std::size_t idx = begin; idx < end; ++idx) acc[w].push(draw(stream));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(job, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Accumulator total(size);
  for (const auto& a : acc) total.merge(a);
  MCEstimate est;
  est.mean = TensorF(dim, rank);
  est.stderr_.resize(size);
  const double n = static_cast<double>(total.count);
  for (std::size_t i = 0; i < size; ++i) {
    est.mean[i] = weight * total.mean[i];
    const double var = n > 1 ? total.m2[i] / (n - 1) : 0.0;
    est.stderr_[i] = weight * std::sqrt(var / n);
  }
  est.samples = total.count;
  est.seed = seed;
  est.workers = workers;
  est.weight = weight;
  return est;
}

ComparisonReport compare(std::string name, MCEstimate lhs, TensorF rhs, double threshold, double stderr_floor) {
  ComparisonReport rep;
  rep.name = std::move(name);
  rep.threshold = threshold;
  if (lhs.mean.dim() != rhs.dim() || lhs.mean.rank() != rhs.rank())
    throw std::invalid_argument("compare: tensor shapes differ");
  rep.z.resize(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rep.z[i] = std::abs(lhs.mean[i] - rhs[i]) / std::max(lhs.stderr_[i], stderr_floor);
    rep.z_max = std::max(rep.z_max, rep.z[i]);
  }
  rep.pass = rep.z_max <= threshold;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

TensorF lemma_Q_power_rhs(int n, int k, int i) {
  if (k < 0 || k > n || i < 0) throw std::invalid_argument("lemma_Q_power: need 0 <= k <= n, i >= 0");
  double c;
  if (k == 0)
    c = i == 0 ? 1.0 : 0.0;
  else
    c = (gamma(half(n)) * gamma(half(k) + i) * reciprocal_gamma(half(n) + i) * reciprocal_gamma(half(k)))
            .to_double();
  return q_pow(n, i) * c;
}

ComparisonReport check_lemma_Q_power(int n, int k, int i, const MCSettings& mc) {
  TensorF rhs = lemma_Q_power_rhs(n, k, i);
  auto draw = [&](Stream& st) {
    const Mat l = sample_grassmann(n, k, st);
    return k == 0 ? (i == 0 ? TensorF::scalar(n, 1.0) : TensorF(n, 2 * i)) : sym_pow(q_of_subspace(l), i);
  };
  return compare("lemma_Q_power n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i),
                 run_mc(n, 2 * i, mc.samples, mc.seed, mc.workers, 1.0, draw), rhs, mc.threshold);
}

TensorF lemma_sine_Q_rhs(int n, int k, int r, int i, const Mat& f_basis) {
  if (k + r < n || k < 0 || r < 0 || k > n || r > n || f_basis.cols() != r)
    throw std::invalid_argument("lemma_sine_Q: need k + r >= n and F of dimension r");
  const ExactScalar pre = ExactScalar(factorial(r) * factorial(k) / (factorial(n) * factorial(k + r - n))) *
                          gamma(half(n + 2)) * gamma(half(k) + i) * reciprocal_gamma(half(n + 2) + i) *
                          reciprocal_gamma(half(k + 2));
  TensorF out = q_pow(n, i) * (pre * ExactScalar(Rational(k + 2 * i, 2))).to_double();
  if (i > 0 && r > 0) {
    Rational c(i * (k - n), r);
    c.canonicalize();
    out.add_scaled(sym_mul(q_pow(n, i - 1), q_of_subspace(f_basis)), (pre * ExactScalar(c)).to_double());
  }
  return out;
}

ComparisonReport check_lemma_sine_Q(int n, int k, int r, int i, const Mat& f_basis, const MCSettings& mc) {
  TensorF rhs = lemma_sine_Q_rhs(n, k, r, i, f_basis);
  auto draw = [&](Stream& st) {
    const Mat l = sample_grassmann(n, k, st);
    const double sine = generalized_sine(f_basis, l);
    return sym_pow(q_of_subspace(l), i) * (sine * sine);
  };
  return compare("lemma_sine_Q n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r) +
                     " i=" + std::to_string(i),
                 run_mc(n, 2 * i, mc.samples, mc.seed, mc.workers, 1.0, draw), rhs, mc.threshold);
}

TensorF prop_integrand_rhs(int n, int k, int j, int s, int i, const Mat& f_basis, const Vec& u) {
  if (!(0 <= j && j < k && k < n)) throw std::invalid_argument("prop_integrand: need j < k < n");
  if (f_basis.cols() != n - k + j) throw std::invalid_argument("prop_integrand: F must have dimension n-k+j");
  const CoefficientTable table = k == 1 ? coeff_k1_local(n, s, i) : coeff_local_general(n, k, j, s, i);
  return table_on_direction(table, u, q_of_subspace(f_basis));
}

ComparisonReport check_prop_integrand(int n, int k, int j, int s, int i, const Mat& f_basis, const Vec& u,
                                      const MCSettings& mc) {
  if ((f_basis.transpose() * u).norm() > 1e-10 || std::abs(u.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("prop_integrand: u must be a unit vector orthogonal to F");
  TensorF rhs = prop_integrand_rhs(n, k, j, s, i, f_basis, u);
  auto draw = [&](Stream& st) {
    for (;;) {
      const Mat l = sample_grassmann(n, k, st);
      const Vec pu = l * (l.transpose() * u);
      const double norm = pu.norm();
      if (norm < 1e-12) continue;
      const double sine = generalized_sine(f_basis, l);
      const double w = std::pow(norm, j - k) * sine * sine;
      return sym_mul(sym_pow(q_of_subspace(l), i), vec_pow(Vec(pu / norm), s)) * w;
    }
  };
  return compare("prop_integrand n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j) +
                     " s=" + std::to_string(s) + " i=" + std::to_string(i),
                 run_mc(n, s + 2 * i, mc.samples, mc.seed, mc.workers, 1.0, draw), rhs, mc.threshold);
}

}  // namespace crofton
