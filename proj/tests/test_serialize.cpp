#include <doctest.h>

#include <random>
#include <sstream>

#include "crofton/serialize.hpp"

using namespace crofton;

TEST_CASE("tensor JSON round trip") {
  std::mt19937_64 g(2);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int dim = 1; dim <= 4; ++dim)
    for (int rank = 0; rank <= 4; ++rank) {
      TensorF t(dim, rank);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = u(g);
      const Json j = Json::parse(tensor_to_json(t).dump());
      CHECK(tensor_from_json(j) == t);
    }
  const Json j = tensor_to_json(vec_pow(Vec(Vec::Ones(2)), 1));
  CHECK(j["dim"] == 2);
  CHECK(j["rank"] == 1);
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("coefficient table as JSON") {
  const CoefficientTable t = coefficient_table(Formula::cor_s3, {3, 2, 1, 3, 0, 0});
  const Json j = table_to_json(t);
  CHECK(j["formula"] == "cor_s3");
  CHECK(j["params"]["n"] == 3);
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["value"] == "1/3");
  CHECK(j["entries"][0]["terms"][0]["coeff_rational"] == "1/3");
  CHECK(j["entries"][0]["terms"][0]["pi_half_exponent"] == 0);
  CHECK(j["entries"][0]["target_s"] == 3);
}

TEST_CASE("coefficient table as CSV") {
  const CoefficientTable t = coefficient_table(Formula::thm_k1_local, {3, 1, 0, 2, 0, 0});
  const std::string csv = table_to_csv(t);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line + "\n" == csv_header());
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 12);
    CHECK(line.rfind("thm_k1_local,3,1,0,2,0,", 0) == 0);
  }
  CHECK(rows == static_cast<int>(t.entries.size()));
  CHECK(table_to_csv(t) == csv);
  CHECK(table_to_csv(t, false) == csv.substr(csv_header().size()));
}

TEST_CASE("verification report JSON and CSV") {
  const Polytope c = catalog("cube", 3);
  CroftonQuery q;
  q.formula = Formula::thm_j_eq_k;
  q.params.n = 3;
  q.params.k = 1;
  MCSettings mc;
  mc.samples = 500;
  mc.seed = 3;
  const VerificationReport r = verify(c, q, mc);
  const Json j = verification_to_json(r);
  CHECK(j["formula"] == "thm_j_eq_k");
  CHECK(j["samples"] == 500);
  CHECK(j["seed"] == 3);
  CHECK(j["pass"] == r.comparison.pass);
  CHECK(j["lhs"]["stderr"].size() == 1);
  CHECK(tensor_from_json(j["rhs"]) == r.comparison.rhs);
  const std::string row = verification_csv_row(r);
  CHECK(row.rfind("thm_j_eq_k,3,1,1,0,0,0,0,500,3,1,", 0) == 0);
  const std::string header = verification_csv_header();
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
}

TEST_CASE("polytope from JSON") {
  const Json j = Json::parse(R"({"name": "tri", "dim": 2, "vertices": [[0,0],[2,0],[0,2],[0.5,0.5]]})");
  const Polytope p = polytope_from_json(j);
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 3);
  CHECK_THROWS(polytope_from_json(Json::parse(R"({"vertices": []})")));
  CHECK_THROWS(polytope_from_json(Json::parse(R"({"points": [[0]]})")));
}

TEST_CASE("measure JSON") {
  const Polytope c = catalog("cube", 2);
  const MeasureValue m = measure(c, {2, 1, 0, 0, 0, MeasureKind::extrinsic});
  const Json j = measure_to_json(m);
  CHECK(j["kind"] == "extrinsic");
  CHECK(j["j"] == 1);
  CHECK(tensor_from_json(j["value"]).value() == doctest::Approx(4.0));
}
