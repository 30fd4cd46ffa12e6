#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace psilab::cli {

namespace {

std::string quoted(std::string_view text) {
    return "'" + std::string(text) + "'";
}

std::string render(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    return std::get<bool>(cell) ? "true" : "false";
}

nlohmann::ordered_json json_value(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* d = std::get_if<double>(&cell)) {
        // JSON has no inf/nan; keep them readable as strings.
        if (!std::isfinite(*d)) return format_real(*d);
        return *d;
    }
    if (const auto* i = std::get_if<long long>(&cell)) return *i;
    return std::get<bool>(cell);
}

// Splits "lo..hi:count" into its three parts; returns false for other shapes.
bool split_span(std::string_view text, std::string_view& lo, std::string_view& hi, int& count) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) return false;
    const auto colon = text.find(':', dots);
    if (colon == std::string_view::npos) throw UsageError("range " + quoted(text) + " needs ':count'");
    lo = text.substr(0, dots);
    hi = text.substr(dots + 2, colon - dots - 2);
    const std::string_view count_text = text.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 1 || count > 10000) {
        throw UsageError("range " + quoted(text) + " needs a count in [1, 10000]");
    }
    return true;
}

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

template <typename T, typename Parse>
std::vector<T> parse_range(std::string_view text, Parse parse) {
    if (text.empty()) throw UsageError("empty range");
    std::string_view lo_text, hi_text;
    int count = 0;
    if (split_span(text, lo_text, hi_text, count)) {
        const T lo = parse(lo_text);
        const T hi = parse(hi_text);
        if (count == 1) {
            if (lo != hi) throw UsageError("range " + quoted(text) + " with count 1 needs lo == hi");
            return {lo};
        }
        std::vector<T> out(count);
        for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
        out.back() = hi;
        return out;
    }
    std::vector<T> out;
    for (const auto part : split_list(text)) out.push_back(parse(part));
    return out;
}

}  // namespace

double parse_real(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw UsageError("not a finite real number: " + quoted(text));
    }
    return value;
}

Complex parse_complex(std::string_view text) {
    if (text.empty()) throw UsageError("empty complex number");
    if (text.back() != 'i') return {parse_real(text), 0.0};

    const std::string_view body = text.substr(0, text.size() - 1);
    // The real/imaginary split is the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const auto imaginary = [&](std::string_view part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real(part);
    };
    try {
        if (split == std::string_view::npos) return {0.0, imaginary(body)};
        return {parse_real(body.substr(0, split)), imaginary(body.substr(split))};
    } catch (const UsageError&) {
        throw UsageError("not a complex number of the form a+bi: " + quoted(text));
    }
}

std::vector<double> parse_real_range(std::string_view text) {
    return parse_range<double>(text, parse_real);
}

std::vector<Complex> parse_complex_range(std::string_view text) {
    return parse_range<Complex>(text, parse_complex);
}

std::string format_real(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string format_complex(Complex value) {
    const std::string im = format_real(value.imag() == 0.0 ? 0.0 : value.imag());
    const bool signed_im = !im.empty() && (im[0] == '-' || im[0] == '+');
    return format_real(value.real()) + (signed_im ? "" : "+") + im + "i";
}

Row& Row::set(std::string key, Cell value) {
    for (auto& [k, v] : cells) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    cells.emplace_back(std::move(key), std::move(value));
    return *this;
}

const Cell* Row::find(std::string_view key) const {
    for (const auto& [k, v] : cells) {
        if (k == key) return &v;
    }
    return nullptr;
}

void RunReport::add(Row row) {
    pass = pass && row.pass;
    rows.push_back(std::move(row));
}

std::string to_csv(const RunReport& report) {
    std::string out;
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += report.columns[c];
    }
    out += '\n';
    for (const Row& row : report.rows) {
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
            if (c > 0) out += ',';
            const std::string& column = report.columns[c];
            if (column == "claim") {
                out += row.claim;
            } else if (column == "pass") {
                out += row.pass ? "true" : "false";
            } else if (const Cell* cell = row.find(column)) {
                out += render(*cell);
            }
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const RunReport& report) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Row& row : report.rows) {
        nlohmann::ordered_json entry;
        entry["claim"] = row.claim;
        for (const auto& [key, value] : row.cells) entry[key] = json_value(value);
        entry["pass"] = row.pass;
        rows.push_back(std::move(entry));
    }
    nlohmann::ordered_json out;
    out["command"] = report.command;
    out["parameters"] = std::move(params);
    out["rows"] = std::move(rows);
    out["pass"] = report.pass;
    out["tolerance_used"] = report.tolerance_used;
    out["wall_time_ms"] = report.wall_time_ms;
    return out;
}

}  // namespace psilab::cli
