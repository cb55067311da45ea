#pragma once

#include <functional>
#include <string>
#include <vector>

#include "poisson/config.hpp"
#include "poisson/report.hpp"

namespace poisson {

struct CheckInfo {
  std::string id;
  std::string suite;
  std::string anchor;  ///< the result the check verifies
};

/// Every check id a suite can emit.
const std::vector<CheckInfo>& check_catalogue();
/// One line per check: "<id>  [<suite>]  <anchor>".
std::string list_checks();

/// Runs one suite. A failing estimator is rethrown as Error naming the check.
std::vector<ReportRow> run_suite(const std::string& suite, const RunConfig& config);

/// Runs `suites` in order (all configured suites when empty).
Report run_report(const RunConfig& config, const std::vector<std::string>& suites = {},
                  const std::function<void(const std::string&)>& progress = nullptr);

}  // namespace poisson
