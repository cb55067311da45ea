#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "poisson/estimate.hpp"

namespace poisson {

/// One check of a run: both sides, their paired difference and the verdict.
struct ReportRow {
  std::string suite;
  std::string check;
  std::string inputs;
  Estimate left;
  Estimate right;
  Estimate difference;
  double tolerance = 0.0;
  Verdict verdict = Verdict::reported;
  std::string note;
};

ReportRow make_row(std::string suite, const IdentityReport& r, std::string inputs);

/// Estimate with zero standard error.
Estimate exact_value(double v, double ci_level = 0.95);

/// Equality of an estimate with an exact oracle value.
ReportRow oracle_row(std::string suite, std::string check, std::string inputs,
                     const Estimate& estimate, double exact);

struct Report {
  std::string version;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  double ci_level = 0.95;
  std::vector<ReportRow> rows;

  /// True when no row is violated.
  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
  /// Writes report.json and report.csv into `dir` (created if needed).
  void write(const std::string& dir) const;
};

std::string hex64(std::uint64_t v);

}  // namespace poisson
