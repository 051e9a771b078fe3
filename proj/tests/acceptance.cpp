// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "crofton/grassmann.hpp"
#include "crofton/suites.hpp"

using namespace crofton;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(const std::string& id, bool pass, const std::string& what) {
  std::printf("%s %s %s\n", pass ? "PASS" : "FAIL", id.c_str(), what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void detail(const std::string& line) {
  std::printf("      %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Exact suites: pass iff every check holds and the whole group meets the time limit.
void exact_criterion(const std::string& id, const std::string& title, const std::vector<SuiteReport>& parts,
                     double seconds, double limit) {
  std::size_t checks = 0, failed = 0;
  for (const auto& p : parts) {
    checks += p.checks;
    failed += p.failures.size();
    for (std::size_t i = 0; i < p.failures.size() && i < 8; ++i) detail(p.name + ": " + p.failures[i]);
  }
  const bool pass = failed == 0 && seconds < limit;
  report(id, pass,
         title + " (" + std::to_string(checks - failed) + "/" + std::to_string(checks) + " exact, " +
             fmt("%.2f s", seconds) + ", limit " + fmt("%.0f s", limit) + ")");
}

struct McRun {
  std::string label;
  std::function<ComparisonReport()> run;
};

// Monte Carlo criteria: every run within the z threshold and its own time limit.
bool mc_criterion(const std::string& id, const std::string& title, const std::vector<McRun>& runs, double limit,
                  bool print_pass = true) {
  bool pass = true;
  double worst = 0.0, total = 0.0;
  for (const auto& r : runs) {
    const auto t0 = Clock::now();
    const ComparisonReport c = r.run();
    const double secs = since(t0);
    total += secs;
    worst = std::max(worst, c.z_max);
    const bool ok = c.pass && secs < limit;
    pass = pass && ok;
    detail((ok ? "ok   " : "FAIL ") + r.label + fmt(": max |z| %.2f", c.z_max) + fmt(", %.1f s", secs) +
           fmt(", n=%.0f", double(c.lhs.samples)));
  }
  if (print_pass)
    report(id, pass,
           title + " (" + std::to_string(runs.size()) + " runs, max |z| " + fmt("%.2f", worst) + ", " +
               fmt("%.1f s", total) + ")");
  return pass;
}

MCSettings settings(std::size_t samples, std::uint64_t seed) {
  MCSettings mc;
  mc.samples = samples;
  mc.seed = seed;
  return mc;
}

Mat plane_basis(const Vec& a, const Vec& b) {
  Mat m(a.size(), 2);
  m << a, b;
  return Eigen::HouseholderQR<Mat>(m).householderQ() * Mat::Identity(a.size(), 2);
}

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

// Half-space clipping box on R^3: x <= 0.5, y <= 0.7.
Box clip_box() {
  Box b = Box::everything(3);
  b.hi[0] = 0.5;
  b.hi[1] = 0.7;
  return b;
}

const Box kBox = clip_box();

std::string params_label(const Params& p) {
  return "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + " j=" + std::to_string(p.j) +
         " s=" + std::to_string(p.s) + " i=" + std::to_string(p.i) + " r=" + std::to_string(p.r);
}

McRun crofton_run(const std::string& body_name, const Polytope& body, Formula f, Params p, bool boxed,
                  std::size_t samples, std::uint64_t seed, ComparisonReport* keep = nullptr) {
  const std::string label = to_string(f) + " " + body_name + " " + params_label(p) + (boxed ? " boxed" : " global");
  return {label, [=, &body] {
            CroftonQuery q;
            q.formula = f;
            q.params = p;
            q.box = boxed ? &kBox : nullptr;
            ComparisonReport c = verify(body, q, settings(samples, seed)).comparison;
            if (keep) *keep = c;
            return c;
          }};
}

Params P(int n, int k, int j, int s, int i, int r = 0) { return Params{n, k, j, s, i, r}; }

}  // namespace

int main() {
  const auto start = Clock::now();

  // 1: gamma identities
  {
    const auto t0 = Clock::now();
    std::vector<SuiteReport> parts = {lemma61_grid(10, 20), lemma62_grid(20), lemma63_grid(20, 6),
                                      lemma64_grid(20, 6)};
    exact_criterion("1", "gamma identity grids", parts, since(t0), 5.0);
  }

  // 2: coefficient consistency
  {
    const auto t0 = Clock::now();
    const SuiteReport a = global_vs_i0(5, 5), b = s3_single_coefficient(6), c = formal_k1_vs_k1_theorem(5, 6),
                      d = psi_combination_vs_closed_form(4, 4), e = closed_form_psi_vs_extrinsic(4);
    const double secs = since(t0);
    exact_criterion("2a", "weighted global theorem at i=0 equals the i=0 corollary, n<=5, s<=5", {a}, secs, 10);
    exact_criterion("2b", "s=3, k=2, j=1 collapses to 1/binom(n,2) (1/3 at n=3)", {b}, secs, 10);
    exact_criterion("2c", "j=k-1 corollary taken at k=1 equals the k=1 theorem, n<=5, s<=6", {c}, secs, 10);
    exact_criterion("2d", "Psi combination of the extrinsic tables equals the Psi closed form, n<=4, s<=4", {d},
                    secs, 10);
    exact_criterion("2e", "Psi closed form equals the extrinsic theorems at s in {0,1}", {e}, secs, 10);
  }

  // 3: polytope measure identities
  {
    const auto t0 = Clock::now();
    const SuiteReport rel = facet_relation(1e-8), mcm = mcmullen_relation(1e-8);
    const double secs = since(t0);
    exact_criterion("3", "facet relation and McMullen relation on cube(2), cube(3), simplex(3), max error " +
                             fmt("%.1e", std::max(rel.max_error, mcm.max_error)),
                    {rel, mcm}, secs, 10);
  }

  // 4: Grassmannian integrals by Monte Carlo
  {
    const std::size_t N = 100000;
    std::vector<McRun> q_runs;
    std::uint64_t seed = 100;
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i <= 2; ++i) {
          const std::uint64_t sd = seed++;
          q_runs.push_back({"Q(L)^i mean n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" +
                                std::to_string(i),
                            [=] { return check_lemma_Q_power(n, k, i, settings(N, sd)); }});
        }
    mc_criterion("4a", "mean of Q(L)^i over G(n,k), n<=4, k<n, i<=2", q_runs, 30);

    const Mat tilted = plane_basis(v3(1, 0.3, 0.2), v3(-0.1, 1, 0.5));
    std::vector<McRun> sine_runs;
    for (int r = 2; r <= 3; ++r)
      for (int i = 0; i <= 1; ++i) {
        const Mat f = r == 2 ? tilted : Mat(Mat::Identity(3, 3));
        const std::uint64_t sd = seed++;
        sine_runs.push_back({"[F,L]^2 Q(L)^i n=3 k=2 r=" + std::to_string(r) + " i=" + std::to_string(i),
                             [=] { return check_lemma_sine_Q(3, 2, r, i, f, settings(N, sd)); }});
      }
    mc_criterion("4b", "sine-weighted mean of Q(L)^i, n=3, (k,r) in {(2,2),(2,3)}, i<=1", sine_runs, 30);

    const Eigen::Vector3d f0 = tilted.col(0), f1 = tilted.col(1);
    const Vec u = f0.cross(f1).normalized();
    std::vector<McRun> dir2, dir1;
    for (int s = 0; s <= 2; ++s)
      for (int i = 0; i <= 1; ++i) {
        const std::uint64_t sd = seed++;
        dir2.push_back({"direction integral n=3 k=2 j=1 s=" + std::to_string(s) + " i=" + std::to_string(i),
                        [=] { return check_prop_integrand(3, 2, 1, s, i, tilted, u, settings(N, sd)); }});
      }
    mc_criterion("4c", "direction integral behind the local formula, n=3, k=2, j=1, s<=2, i<=1", dir2, 30);
    for (int s = 0; s <= 3; ++s)
      for (int i = 0; i <= 1; ++i) {
        const std::uint64_t sd = seed++;
        dir1.push_back({"direction integral n=3 k=1 s=" + std::to_string(s) + " i=" + std::to_string(i),
                        [=] { return check_prop_integrand(3, 1, 0, s, i, tilted, u, settings(N, sd)); }});
      }
    mc_criterion("4d", "direction integral behind the k=1 formula, n=3, s<=3, i<=1", dir1, 30);
  }

  // 5: end-to-end Crofton formulae
  {
    const Polytope cube = catalog("cube", 3), simplex = catalog("simplex", 3);
    const std::size_t N = 100000;
    std::uint64_t seed = 500;

    std::vector<McRun> a;
    for (int i = 0; i <= 1; ++i)
      for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s)
          a.push_back(crofton_run("cube:3", cube, Formula::thm_j_eq_k, P(3, 2, 2, s, i, r), false, N, seed++));
    mc_criterion("5a", "j=k formula on cube(3), k=2, i,r in {0,1}, s in {0,1} (zero for s=1)", a, 60);

    std::vector<McRun> b;
    for (int s = 0; s <= 2; ++s)
      for (int i = 0; i <= 1; ++i)
        for (bool boxed : {true, false})
          b.push_back(crofton_run("cube:3", cube, Formula::thm_k1_local, P(3, 1, 0, s, i), boxed, N, seed++));
    mc_criterion("5b", "k=1 formula on cube(3), s<=2, i<=1, boxed and global", b, 60);

    std::vector<McRun> c;
    for (const auto* name : {"cube:3", "simplex:3"}) {
      const Polytope& body = std::string(name) == "cube:3" ? cube : simplex;
      for (int s = 0; s <= 2; ++s) {
        c.push_back(crofton_run(name, body, Formula::thm_local_general, P(3, 2, 1, s, 0), true, N, seed++));
        c.push_back(crofton_run(name, body, Formula::cor_j_km1, P(3, 2, 1, s, 0), true, N, seed++));
      }
    }
    mc_criterion("5c", "local j<k formula and its j=k-1 form on cube(3), simplex(3), k=2, j=1, s<=2", c, 60);

    std::vector<McRun> d;
    for (int s = 0; s <= 2; ++s)
      d.push_back(crofton_run("cube:3", cube, Formula::thm_ext_jkm1, P(3, 2, 1, s, 0), true, 200000, seed++));
    mc_criterion("5d", "extrinsic j=k-1 formula on cube(3), k=2, s<=2 (s=1: special branch)", d, 60);

    std::vector<McRun> e;
    for (int s = 0; s <= 3; ++s)
      e.push_back(crofton_run("cube:3", cube, Formula::thm_ext_k1, P(3, 1, 0, s, 0), true, N, seed++));
    mc_criterion("5e", "extrinsic k=1 formula on cube(3), s<=3", e, 60);

    ComparisonReport local1, local3;
    std::vector<McRun> f = {
        crofton_run("cube:3", cube, Formula::cor_k1_global, P(3, 1, 0, 1, 0), false, N, seed++),
        crofton_run("cube:3", cube, Formula::cor_k1_global, P(3, 1, 0, 3, 0), false, N, seed++),
        crofton_run("cube:3", cube, Formula::thm_k1_local, P(3, 1, 0, 1, 0), true, N, seed++, &local1),
        crofton_run("cube:3", cube, Formula::thm_k1_local, P(3, 1, 0, 3, 0), true, N, seed++, &local3),
    };
    const bool runs_ok = mc_criterion("5f", "", f, 60, false);
    const double size1 = max_abs(local1.rhs), size3 = max_abs(local3.rhs);
    detail(fmt("boxed local values: largest component %.4f (s=1)", size1) + fmt(", %.4f (s=3)", size3));
    auto clearly_nonzero = [](const ComparisonReport& c) {
      double se = 0.0;
      for (double x : c.lhs.stderr_) se = std::max(se, x);
      return max_abs(c.rhs) > 1e-3 && max_abs(c.lhs.mean) > 10 * se;
    };
    const bool nonzero = clearly_nonzero(local1) && clearly_nonzero(local3);
    report("5f", runs_ok && nonzero,
           "odd s: global k=1 integral vanishes while the boxed local value is nonzero and matches");
  }

  std::printf("%s: %d failing criteria, %.1f s\n", failures ? "FAILED" : "OK", failures, since(start));
  return failures ? 1 : 0;
}
