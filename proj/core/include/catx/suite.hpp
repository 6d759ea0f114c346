#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catx/io.hpp"

namespace catx {

/// Parameters of a verification sweep.
struct SuiteConfig {
  std::vector<CartanType> types;
  int max_rank = 4;
  /// Empty means every subset of I; otherwise the I(theta) models to use.
  std::vector<IndexSet> itheta;
  /// Any of "biclosed", "filtration", "order-axioms", "algebra".
  std::vector<std::string> checks;
  std::string output_path;
  std::uint64_t seed = 0;
  JPrimeConvention convention = JPrimeConvention::kIthetaMinusJ;
  NablaWeight nabla_weight = NablaWeight::kWInverse;
  /// The algebra check covers A_0 .. A_algebra_n.
  int algebra_n = 4;
  /// Random chains per model for order-axioms at rank >= 3.
  std::size_t order_samples = 10000;
  bool override_limits = false;

  /// Throws InputError on an unknown check, a rank beyond max_rank, or
  /// max_rank > 4 without the override.
  void validate() const;
};

/// Reads the JSON form of a config; throws InputError on anything malformed.
SuiteConfig parse_suite_config(const Json& j);
Json config_to_json(const SuiteConfig& cfg);

struct SuiteRecord {
  std::string check;
  Json params;
  bool pass = true;
  Json details;
  Json counterexample;  // null when the record passes
  double seconds = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteRecord> records;  // sorted by (check, params)
  std::string timestamp;
  double total_seconds = 0;

  bool pass() const;
  /// Everything except the "timing" field is a function of the config alone.
  Json to_json() const;
};

const char* tool_version();

/// Runs every selected check over the parameter grid.
Report run_suite(const SuiteConfig& cfg);

/// 0 when every record passes, 1 otherwise.
int exit_code(const Report& report);

}  // namespace catx
