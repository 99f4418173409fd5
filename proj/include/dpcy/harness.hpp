#ifndef DPCY_HARNESS_HPP
#define DPCY_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dpcy/field.hpp"
#include "dpcy/random.hpp"

namespace dpcy {

using Json = nlohmann::json;

/// Provenance tags accepted on expected values.
inline constexpr std::string_view kProvenanceTags[] = {"paper", "derived", "trivial"};

struct CaseSpec {
  std::string id;
  std::string suite;
  std::string operation;
  Json params;
  /// key -> {"value": ..., "tag": provenance}
  Json expected;
  std::string anchor;
};

/// Reproduction cases keyed by id, in file order.
class Registry {
 public:
  /// Throws AlgebraError on malformed entries, duplicate ids, unknown
  /// operations or expected values without a provenance tag.
  static Registry from_json(const Json& doc);
  static Registry load(const std::filesystem::path& path);

  const std::vector<CaseSpec>& cases() const { return cases_; }
  /// Throws AlgebraError("unknown case '...'").
  const CaseSpec& find(std::string_view id) const;
  /// Cases of one suite; all cases for the empty filter.
  std::vector<const CaseSpec*> select(std::string_view suite) const;
  std::vector<std::string> suites() const;

 private:
  std::vector<CaseSpec> cases_;
};

/// Registry shipped with the sources (DPCY_DATA_DIR/cases.json), overridable
/// by the DPCY_CASES environment variable.
std::filesystem::path default_registry_path();

std::vector<std::string> known_operations();

struct RunOptions {
  Seed seed = kDefaultSeed;
  std::uint32_t prime = kDefaultPrime;
  bool rational = false;
  /// Adds the property checks to the report and fails the case on a violation.
  bool properties = false;
  bool timing = true;
};

/// Report: case_id, operation, status (pass, fail, degenerate-retry,
/// skipped), computed, expected, diff, seed, seed_used, retries, prime,
/// field, and wall_ms when timing is on. Never throws on computation errors;
/// they are reported as status "fail" with an "error" field.
Json run_case(const CaseSpec& spec, const RunOptions& opts = {});

/// Runs seeds s..s+4; "stable" iff at least 4 of them pass.
Json sweep_case(const CaseSpec& spec, const RunOptions& opts = {}, int seeds = 5, int required = 4);

/// Computed values of one operation, without comparison; params as in the
/// registry.
Json compute(std::string_view operation, const Json& params, const RunOptions& opts = {});

bool report_passed(const Json& report);

}  // namespace dpcy

#endif  // DPCY_HARNESS_HPP
