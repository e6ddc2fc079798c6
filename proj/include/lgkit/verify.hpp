#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lgkit {

// One exact comparison. pass is true iff left and right are equal values.
struct VerificationCell {
  std::map<std::string, int> params;
  std::string left;
  std::string right;
  bool pass = false;
  std::string note;
  friend bool operator==(const VerificationCell&, const VerificationCell&) = default;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerificationCell> cells;

  bool passed() const;
  std::size_t failures() const;
  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct VerifyOptions {
  std::optional<int> max_m;
  std::optional<int> max_k;
  std::optional<int> samples;  // random braids for the tensor suite
  int jobs = 1;
  std::uint64_t seed = 20240229;
  std::string fixture_path;    // empty: built-in two-dimensional fixture
  bool corrupt_xi = false;     // replace xi_0 by xi_0 + 1 (negative control)
};

// Parameter ceilings; larger requests raise ResourceLimitExceeded.
struct VerifyBudget {
  static constexpr int max_m = 16;
  static constexpr int max_k = 40;
  static constexpr int max_samples = 1000;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite and
// ResourceLimitExceeded for ranges beyond VerifyBudget.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

struct ReportDocument {
  std::string tool = "lgkit";
  std::string version;
  std::vector<SuiteResult> suites;
  double elapsed_seconds = 0.0;  // kept outside the comparison payload

  bool passed() const;
  // The payload (tool, version, suites) is deterministic; timing is a
  // separate top-level field and can be omitted.
  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
  static ReportDocument from_json(const std::string& text);
  bool same_payload(const ReportDocument& o) const;
};

}  // namespace lgkit
