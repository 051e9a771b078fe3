#pragma once

#include <string>
#include <vector>

namespace crofton {

// Outcome of a batch of identity checks.
struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // one description per failed check
  double seconds = 0.0;
  double max_error = 0.0;             // float suites only

  bool pass() const { return failures.empty(); }
};

// Gamma identities on their grids.
SuiteReport lemma61_grid(int q_max = 10, int ab_twice_max = 20);
SuiteReport lemma62_grid(int a_max = 20);
SuiteReport lemma63_grid(int abc_twice_max = 20, int z_max = 6);
SuiteReport lemma64_grid(int ab_twice_max = 20, int t_max = 6);

// Exact coefficient consistency.
SuiteReport global_vs_i0(int n_max = 5, int s_max = 5);
SuiteReport s3_single_coefficient(int n_max = 6);
SuiteReport formal_k1_vs_k1_theorem(int n_max = 5, int s_max = 6);
SuiteReport psi_combination_vs_closed_form(int n_max = 4, int s_max = 4);
SuiteReport closed_form_psi_vs_extrinsic(int n_max = 4);

// Float identities for polytope measures on cube(2), cube(3), simplex(3).
SuiteReport facet_relation(double tol = 1e-8);
SuiteReport mcmullen_relation(double tol = 1e-8);

// Named groups: "gamma", "coefficients", "measures" or "all".
std::vector<SuiteReport> run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace crofton
