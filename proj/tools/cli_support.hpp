#pragma once

// Flag parsing and report rendering shared by the psilab subcommands.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "psilab/special_fn.hpp"

namespace psilab::cli {

/// Malformed flag value; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_real(std::string_view text);

/// "a+bi", "a-bi", "a", "bi", "i", "-i"; no spaces.
Complex parse_complex(std::string_view text);

/// "lo..hi:count" (inclusive, evenly spaced), a comma-separated list, or a single value.
std::vector<double> parse_real_range(std::string_view text);
std::vector<Complex> parse_complex_range(std::string_view text);

/// Decimal rendering with 17 significant digits ("%.17g").
std::string format_real(double value);
std::string format_complex(Complex value);

using Cell = std::variant<std::string, double, long long, bool>;

struct Row {
    std::string claim;
    std::vector<std::pair<std::string, Cell>> cells;
    bool pass = true;

    Row& set(std::string key, Cell value);
    const Cell* find(std::string_view key) const;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    /// CSV column order; "claim" and "pass" refer to the Row members.
    std::vector<std::string> columns;
    std::vector<Row> rows;
    bool pass = true;
    double tolerance_used = 0.0;
    long long wall_time_ms = 0;

    void add(Row row);
};

/// Header line plus one line per row, LF endings. Contains no timing information.
std::string to_csv(const RunReport& report);

/// {command, parameters, rows, pass, tolerance_used, wall_time_ms}.
nlohmann::ordered_json to_json(const RunReport& report);

}  // namespace psilab::cli
