#pragma once

#include "qcount/cli/report.hpp"
#include "qcount/spectrum.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcount::cli {

/// Bad command line or config file. Maps to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 2 covers numerical inconsistencies and failed oracle checks.
enum class ExitCode : int { ok = 0, config = 1, numerical = 2 };

/// Fully resolved settings of one invocation, after task defaults and then
/// file and flag overrides have been applied.
struct RunConfig {
    std::string task;  ///< fig, dist, gscan, quench, kernels, oracle
    int figure = 0;    ///< 1…7 for task "fig"

    ModelParams params;
    std::vector<double> g_grid;
    std::vector<double> temperatures;  ///< k_BT/J
    double gamma0 = 1.0;
    double bath_t = 0.0;
    std::vector<double> times;         ///< J·t
    double delta_g = 1e-3;
    int max_distance = 10;
    /// Fig. 2 compares γ values; each panel carries its own T grid and the
    /// temperatures at which full distributions are reported.
    struct Panel {
        double gamma = 1.0;
        std::vector<double> temperatures;
        std::vector<double> insets;
    };
    std::vector<Panel> panels;

    int oracle_n = 8;
    std::string check = "all";

    std::string out;   ///< empty: standard output
    Format format = Format::csv;
    unsigned workers = 0;

    /// Key/value pairs written into every output header. workers and the
    /// output path are left out: neither changes the data.
    std::vector<std::pair<std::string, std::string>> describe() const;
};

/// "0,0.05,0.3,1" or "start:stop:step" (inclusive, step > 0). Throws
/// ConfigError on anything else.
std::vector<double> parse_grid(std::string_view text);

/// Runs one task and returns its report. Library errors propagate.
Report execute(const RunConfig& config);

/// Parses the command line (argv[0] is skipped), executes and writes output.
/// Never throws; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcount::cli
