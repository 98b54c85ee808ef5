#include "qcount/cli/report.hpp"

#include "qcount/error.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <ostream>

namespace qcount::cli {

namespace {

constexpr const char* version = "0.1.0";

std::string cell_text(const Cell& c)
{
    if (const auto* s = std::get_if<std::string>(&c))
        return *s;
    return format_number(std::get<double>(c));
}

// JSON numbers use nlohmann's round-trip printing, which is deterministic and
// loses nothing; non-finite values have no JSON literal and become strings.
nlohmann::ordered_json cell_json(const Cell& c)
{
    if (const auto* s = std::get_if<std::string>(&c))
        return *s;
    const double x = std::get<double>(c);
    if (!std::isfinite(x))
        return format_number(x);
    return x == 0.0 ? 0.0 : x;
}

}  // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw NumericalInconsistency("table " + name + ": row width does not match columns");
    rows.push_back(std::move(row));
}

Table& Report::add_table(std::string name, std::vector<std::string> columns)
{
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
}

std::string format_number(double x)
{
    if (x == 0.0)
        return "0";  // folds −0 as well
    return fmt::format("{}", x);
}

void write_csv(const Report& report, std::ostream& os)
{
    os << "# qcount " << version << '\n';
    os << "# task: " << report.task << '\n';
    for (const auto& [key, value] : report.config)
        os << "# config." << key << ": " << value << '\n';
    for (const auto& [key, value] : report.metadata)
        os << "# meta." << key << ": " << cell_text(value) << '\n';
    for (const Table& t : report.tables) {
        os << "# table: " << t.name << '\n';
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << cell_text(row[i]);
            os << '\n';
        }
    }
}

void write_json(const Report& report, std::ostream& os)
{
    nlohmann::ordered_json doc;
    doc["qcount"] = version;
    doc["task"] = report.task;
    doc["config"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.config)
        doc["config"][key] = value;
    doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.metadata)
        doc["metadata"][key] = cell_json(value);
    doc["tables"] = nlohmann::ordered_json::array();
    for (const Table& t : report.tables) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        jt["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json jr = nlohmann::ordered_json::array();
            for (const Cell& c : row)
                jr.push_back(cell_json(c));
            jt["rows"].push_back(std::move(jr));
        }
        doc["tables"].push_back(std::move(jt));
    }
    os << doc.dump(1) << '\n';
}

void write(const Report& report, Format format, std::ostream& os)
{
    if (format == Format::json)
        write_json(report, os);
    else
        write_csv(report, os);
}

}  // namespace qcount::cli
