#pragma once

#include "qcount/cli/app.hpp"
#include "qcount/cli/report.hpp"

#include <string>
#include <vector>

namespace qcount::cli {

struct OracleCheck {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed() const noexcept { return max_error <= tolerance; }
};

/// Names accepted by --check besides "all".
const std::vector<std::string>& oracle_check_names();

/// Runs the selected oracle comparisons at config.oracle_n sites.
std::vector<OracleCheck> oracle_checks(const RunConfig& config);

/// oracle_checks as a report table; marks the report failed if any check
/// exceeds its tolerance.
void run_oracle_suite(const RunConfig& config, Report& report);

}  // namespace qcount::cli
