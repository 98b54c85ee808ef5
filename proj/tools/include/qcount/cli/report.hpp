#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcount::cli {

using Cell = std::variant<double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Everything one invocation writes: the resolved configuration, run
/// metadata (diagnostics such as N_d/N) and the data tables, all in insertion
/// order so the output is reproducible byte for byte.
struct Report {
    std::string task;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::pair<std::string, Cell>> metadata;
    std::vector<Table> tables;
    /// Set by tasks that verify something (the oracle suite) when a check
    /// fails; the report is still written.
    bool failed = false;

    Table& add_table(std::string name, std::vector<std::string> columns);
};

enum class Format { csv, json };

/// Shortest representation that reads back to the same double. The digits
/// depend only on the value, so identical runs give identical text.
std::string format_number(double x);

void write_csv(const Report& report, std::ostream& os);
void write_json(const Report& report, std::ostream& os);
void write(const Report& report, Format format, std::ostream& os);

}  // namespace qcount::cli
