#pragma once

#include <json.hpp>
#include <string>

#include "crofton/coefficients.hpp"
#include "crofton/grassmann.hpp"
#include "crofton/measures.hpp"

namespace crofton {

using Json = nlohmann::json;

// {"dim", "rank", "entries": [[alpha, value], ...]}; alpha is the exponent vector.
Json tensor_to_json(const TensorF& t);
TensorF tensor_from_json(const Json& j);

Json params_to_json(const Params& p);
Json measure_to_json(const MeasureValue& m);

Json table_to_json(const CoefficientTable& t);
std::string csv_header();
// One line per entry, rows sorted by (z, target).
std::string table_to_csv(const CoefficientTable& t, bool header = true);

Json estimate_to_json(const MCEstimate& e);
Json comparison_to_json(const ComparisonReport& r);
Json verification_to_json(const VerificationReport& r);
std::string verification_csv_header();
std::string verification_csv_row(const VerificationReport& r);

// {"vertices": [[x, ...], ...]}
Polytope polytope_from_json(const Json& j);

}  // namespace crofton
