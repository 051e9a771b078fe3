#include "crofton/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "crofton/coefficients.hpp"
#include "crofton/measures.hpp"

namespace crofton {

namespace {

using Clock = std::chrono::steady_clock;

SuiteReport timed(const std::string& name, const std::function<void(SuiteReport&)>& body) {
  SuiteReport r;
  r.name = name;
  const auto t0 = Clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

template <class... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  ((os << args), ...);
  return os.str();
}

void record(SuiteReport& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) r.failures.push_back(what);
}

std::string half_str(int twice) { return twice % 2 ? describe(twice, "/2") : describe(twice / 2); }

std::vector<Polytope> measure_bodies() { return {catalog("cube", 2), catalog("cube", 3), catalog("simplex", 3)}; }

TensorF ext(const Polytope& p, int j, int r, int s, int eps = 0) {
  return phi(p, {p.dim(), j, r, s, eps, MeasureKind::extrinsic});
}

}  // namespace

SuiteReport lemma61_grid(int q_max, int ab_max) {
  return timed("lemma61", [&](SuiteReport& r) {
    for (int q = 0; q <= q_max; ++q)
      for (int a = 1; a <= ab_max; ++a)
        for (int b = 1; b <= ab_max; ++b)
          record(r, lemma61(q, half(a), half(b)).holds(),
                 describe("q=", q, " a=", half_str(a), " b=", half_str(b)));
  });
}

SuiteReport lemma62_grid(int a_max) {
  return timed("lemma62", [&](SuiteReport& r) {
    for (int a = 0; a <= a_max; ++a) record(r, lemma62(a).holds(), describe("a=", a));
  });
}

SuiteReport lemma63_grid(int abc_max, int z_max) {
  return timed("lemma63", [&](SuiteReport& r) {
    for (int a = 1; a <= abc_max; ++a)
      for (int b = 1; b <= abc_max; ++b)
        for (int c = 1; c <= abc_max; ++c)
          for (int z = 0; z <= z_max && 2 * z < a; ++z)
            record(r, lemma63(half(a), half(b), half(c), z).holds(),
                   describe("a=", half_str(a), " b=", half_str(b), " c=", half_str(c), " z=", z));
  });
}

SuiteReport lemma64_grid(int ab_max, int t_max) {
  return timed("lemma64", [&](SuiteReport& r) {
    for (int a = 1; a <= ab_max; ++a)
      for (int b = 1; b <= ab_max; ++b)
        for (int t = 1; t <= t_max; ++t)
          record(r, lemma64(half(a), half(b), t).holds(),
                 describe("a=", half_str(a), " b=", half_str(b), " t=", t));
  });
}

SuiteReport global_vs_i0(int n_max, int s_max) {
  return timed("global theorem at i=0 vs i=0 corollary", [&](SuiteReport& r) {
    for (int n = 3; n <= n_max; ++n)
      for (int k = 2; k < n; ++k)
        for (int j = 0; j < k; ++j)
          for (int s = 0; s <= s_max; ++s)
            record(r, coeff_global(n, k, j, s, 0).by_target() == coeff_i0(n, k, j, s).by_target(),
                   describe("n=", n, " k=", k, " j=", j, " s=", s));
  });
}

SuiteReport s3_single_coefficient(int n_max) {
  return timed("s=3, k=2, j=1 single coefficient 1/binom(n,2)", [&](SuiteReport& r) {
    for (int n = 3; n <= n_max; ++n) {
      const auto m = coeff_i0(n, 2, 1, 3).by_target();
      const bool ok = m.size() == 1 && m.begin()->first == Target{n - 1, 3, 0, 0} &&
                      m.begin()->second == ExactPolyPi(ExactScalar::ratio(2, n * (n - 1)));
      record(r, ok, describe("n=", n));
    }
  });
}

SuiteReport formal_k1_vs_k1_theorem(int n_max, int s_max) {
  return timed("j=k-1 corollary at k=1 vs k=1 theorem", [&](SuiteReport& r) {
    for (int n = 2; n <= n_max; ++n)
      for (int s = 0; s <= s_max; ++s)
        record(r, coeff_j_km1_formal(n, 1, s).by_target() == coeff_k1_local(n, s, 0).by_target(),
               describe("n=", n, " s=", s));
  });
}

SuiteReport psi_combination_vs_closed_form(int n_max, int s_max) {
  return timed("Psi combination of extrinsic tables vs Psi closed form", [&](SuiteReport& r) {
    for (int n = 2; n <= n_max; ++n)
      for (int k = 1; k < n; ++k)
        for (int s = 0; s <= s_max; ++s) {
          std::map<Target, ExactPolyPi> expected;
          const ExactScalar c = coeff_psi(n, k, s);
          if (!c.is_zero()) expected[{n - 1, s, 0, 0, Basis::psi}] = c;
          const auto got = psi_combination(n, k, s).by_target();
          std::string detail = describe("n=", n, " k=", k, " s=", s);
          if (got != expected) {
            const auto it = got.find({n - 1, s, 0, 0, Basis::psi});
            detail += describe(": combined ", it == got.end() ? std::string("0") : it->second.to_string(),
                               ", closed form ", c.to_string());
          }
          record(r, got == expected, detail);
        }
  });
}

SuiteReport closed_form_psi_vs_extrinsic(int n_max) {
  return timed("Psi closed form vs extrinsic theorems at s in {0,1}", [&](SuiteReport& r) {
    for (int n = 2; n <= n_max; ++n)
      for (int k = 1; k < n; ++k)
        for (int s = 0; s <= 1; ++s) {
          // Psi^0 = phi^0 and Psi^1 = phi^1, so both sides have a single phi target.
          std::map<Target, ExactPolyPi> expected;
          const ExactScalar c = coeff_psi(n, k, s);
          if (!c.is_zero()) expected[{n - 1, s, 0, 0}] = c;
          std::map<Target, ExactPolyPi> got;
          if (k == 1) {
            const ExactScalar e = coeff_extrinsic_k1(n, s);
            if (!e.is_zero()) got[{n - 1, s, 0, 0}] = e;
          } else {
            got = coeff_extrinsic(n, k, s).by_target();
          }
          std::string detail = describe("n=", n, " k=", k, " s=", s);
          if (got != expected) {
            const auto it = got.find({n - 1, s, 0, 0});
            detail += describe(": extrinsic ", it == got.end() ? std::string("0") : it->second.to_string(),
                               ", closed form ", c.to_string());
          }
          record(r, got == expected, detail);
        }
  });
}

SuiteReport facet_relation(double tol) {
  return timed("phi^{r,s,1} = Q phi^{r,s,0} - phi^{r,s+2,0} on facets", [&](SuiteReport& r) {
    for (const auto& p : measure_bodies()) {
      const int n = p.dim();
      for (int rr = 0; rr <= 2; ++rr)
        for (int s = 0; s <= 3; ++s) {
          const TensorF lhs = ext(p, n - 1, rr, s, 1);
          const TensorF rhs = sym_mul(q_metric<double>(n), ext(p, n - 1, rr, s)) - ext(p, n - 1, rr, s + 2);
          const double err = max_abs_diff(lhs, rhs);
          r.max_error = std::max(r.max_error, err);
          record(r, err <= tol, describe("n=", n, " r=", rr, " s=", s, " error ", err));
        }
    }
  });
}

SuiteReport mcmullen_relation(double tol) {
  return timed("McMullen relation", [&](SuiteReport& r) {
    for (const auto& p : measure_bodies()) {
      const int n = p.dim();
      for (int j = n - 2; j <= n - 1; ++j)
        for (int s = 0; s <= 3; ++s) {
          const TensorF lhs = ext(p, j, 0, s + 2) * (double(n - j + s) / (s + 1));
          const TensorF rhs = face_sum(p, j, 0, s, FaceWeight::normal_metric);
          const double err = max_abs_diff(lhs, rhs);
          r.max_error = std::max(r.max_error, err);
          record(r, err <= tol, describe("n=", n, " j=", j, " s=", s, " error ", err));
        }
    }
  });
}

std::vector<std::string> suite_names() { return {"gamma", "coefficients", "measures", "all"}; }

std::vector<SuiteReport> run_suite(const std::string& name) {
  std::vector<SuiteReport> out;
  const bool all = name == "all";
  if (all || name == "gamma")
    for (auto f : {+[] { return lemma61_grid(); }, +[] { return lemma62_grid(); }, +[] { return lemma63_grid(); },
                   +[] { return lemma64_grid(); }})
      out.push_back(f());
  if (all || name == "coefficients") {
    out.push_back(global_vs_i0());
    out.push_back(s3_single_coefficient());
    out.push_back(formal_k1_vs_k1_theorem());
    out.push_back(psi_combination_vs_closed_form());
    out.push_back(closed_form_psi_vs_extrinsic());
  }
  if (all || name == "measures") {
    out.push_back(facet_relation());
    out.push_back(mcmullen_relation());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "' (gamma, coefficients, measures, all)");
  return out;
}

}  // namespace crofton
