#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crofton/coefficients.hpp"
#include "crofton/polytope.hpp"

namespace crofton::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;
  std::string body;     // "cube:3" or a JSON file path
  std::string box;      // "" / "all" / 2n numbers: lo_1..lo_n hi_1..hi_n
  std::string formula;
  Params params;
  bool n_given = false;
  int eps = 0;
  std::string suite = "gamma";
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
  double threshold = 4.0;
  std::string output;   // empty: stdout
  OutputFormat format = OutputFormat::json;
  std::string catalog_name;
  int catalog_dim = 0;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

// "cube:3" or a path to {"vertices": [...]}.
Polytope load_body(const std::string& spec);
// "all" / "" gives nullopt; otherwise 2n numbers separated by commas or spaces.
std::optional<Box> parse_box(const std::string& spec, int n);

int cmd_coeffs(const RunConfig& cfg, std::ostream& out);
int cmd_tensor(const RunConfig& cfg, std::ostream& out);
int cmd_identities(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_catalog(const RunConfig& cfg, std::ostream& out);

// Parses argv (and an optional --config JSON file) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crofton::cli
