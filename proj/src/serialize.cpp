#include "crofton/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace crofton {

namespace {

std::string target_name(const Target& t) {
  std::ostringstream os;
  if (t.q_power > 0) os << "Q^" << t.q_power << " ";
  os << (t.basis == Basis::psi ? "psi" : "phi") << "_" << t.order << "^{r," << t.s << "," << t.eps << "}";
  return os.str();
}

std::vector<CoefficientEntry> sorted_entries(const CoefficientTable& t) {
  auto e = t.entries;
  std::stable_sort(e.begin(), e.end(), [](const auto& a, const auto& b) {
    return std::tie(a.z, a.target) < std::tie(b.z, b.target);
  });
  return e;
}

Json poly_to_json(const ExactPolyPi& c) {
  Json terms = Json::array();
  for (const auto& [m, q] : c.terms()) terms.push_back({{"coeff_rational", q.get_str()}, {"pi_half_exponent", m}});
  return terms;
}

}  // namespace

Json tensor_to_json(const TensorF& t) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto a = t.space().alpha(i);
    entries.push_back({std::vector<int>(a.begin(), a.end()), t[i]});
  }
  return {{"dim", t.dim()}, {"rank", t.rank()}, {"entries", entries}};
}

TensorF tensor_from_json(const Json& j) {
  TensorF t(j.at("dim").get<int>(), j.at("rank").get<int>());
  for (const auto& e : j.at("entries")) {
    const auto alpha = e.at(0).get<std::vector<int>>();
    t[t.space().position(alpha.data())] = e.at(1).get<double>();
  }
  return t;
}

Json params_to_json(const Params& p) {
  return {{"n", p.n}, {"k", p.k}, {"j", p.j}, {"s", p.s}, {"i", p.i}, {"r", p.r}};
}

Json measure_to_json(const MeasureValue& m) {
  const auto& s = m.spec;
  return {{"kind", s.kind == MeasureKind::intrinsic ? "intrinsic" : "extrinsic"},
          {"ambient_dim", s.ambient_dim},
          {"j", s.j},
          {"r", s.r},
          {"s", s.s},
          {"eps", s.eps},
          {"value", tensor_to_json(m.value)}};
}

Json table_to_json(const CoefficientTable& t) {
  Json entries = Json::array();
  for (const auto& e : sorted_entries(t)) {
    Json row = {{"z", e.z},
                {"target", target_name(e.target)},
                {"target_order", e.target.order},
                {"target_s", e.target.s},
                {"eps", e.target.eps},
                {"q_power", e.target.q_power},
                {"basis", e.target.basis == Basis::psi ? "psi" : "phi"},
                {"value", e.coeff.to_string()},
                {"terms", poly_to_json(e.coeff)}};
    entries.push_back(row);
  }
  return {{"formula", to_string(t.formula)}, {"params", params_to_json(t.params)}, {"entries", entries}};
}

std::string csv_header() {
  return "formula,n,k,j,s,i,z,target_order,target_s,eps,q_power,coeff_rational,pi_half_exponent\n";
}

std::string table_to_csv(const CoefficientTable& t, bool header) {
  std::ostringstream os;
  if (header) os << csv_header();
  const Params& p = t.params;
  for (const auto& e : sorted_entries(t)) {
    std::vector<std::pair<int, std::string>> terms;
    for (const auto& [m, q] : e.coeff.terms()) terms.emplace_back(m, q.get_str());
    if (terms.empty()) terms.emplace_back(0, "0");
    for (const auto& [m, q] : terms)
      os << to_string(t.formula) << ',' << p.n << ',' << p.k << ',' << p.j << ',' << p.s << ',' << p.i << ','
         << e.z << ',' << e.target.order << ',' << e.target.s << ',' << e.target.eps << ',' << e.target.q_power
         << ',' << q << ',' << m << '\n';
  }
  return os.str();
}

Json estimate_to_json(const MCEstimate& e) {
  return {{"tensor", tensor_to_json(e.mean)}, {"stderr", e.stderr_}, {"samples", e.samples},
          {"seed", e.seed},                   {"workers", e.workers}, {"weight", e.weight}};
}

Json comparison_to_json(const ComparisonReport& r) {
  return {{"name", r.name},   {"lhs", estimate_to_json(r.lhs)}, {"rhs", tensor_to_json(r.rhs)},
          {"z", r.z},         {"z_max", r.z_max},                {"threshold", r.threshold},
          {"pass", r.pass}};
}

Json verification_to_json(const VerificationReport& r) {
  const auto& c = r.comparison;
  return {{"formula", to_string(r.formula)},
          {"params", params_to_json(r.params)},
          {"boxed", r.boxed},
          {"samples", c.lhs.samples},
          {"seed", c.lhs.seed},
          {"workers", c.lhs.workers},
          {"lhs", estimate_to_json(c.lhs)},
          {"rhs", tensor_to_json(c.rhs)},
          {"z_max", c.z_max},
          {"threshold", c.threshold},
          {"pass", c.pass}};
}

std::string verification_csv_header() { return "formula,n,k,j,s,i,r,boxed,samples,seed,workers,z_max,pass\n"; }

std::string verification_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  const Params& p = r.params;
  const auto& c = r.comparison;
  os << to_string(r.formula) << ',' << p.n << ',' << p.k << ',' << p.j << ',' << p.s << ',' << p.i << ',' << p.r
     << ',' << (r.boxed ? 1 : 0) << ',' << c.lhs.samples << ',' << c.lhs.seed << ',' << c.lhs.workers << ','
     << c.z_max << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

Polytope polytope_from_json(const Json& j) {
  std::vector<Vec> pts;
  for (const auto& v : j.at("vertices")) {
    const auto c = v.get<std::vector<double>>();
    pts.push_back(Eigen::Map<const Vec>(c.data(), static_cast<Eigen::Index>(c.size())));
  }
  if (pts.empty()) throw std::invalid_argument("polytope JSON has no vertices");
  return Polytope::build(pts);
}

}  // namespace crofton
