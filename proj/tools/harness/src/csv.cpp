#include "pulsetrain/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "pulsetrain/harness/config.hpp"

namespace pulsetrain::harness {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::size_t CsvTable::column(std::string_view name_prefix) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (std::string_view(header[i]).substr(0, name_prefix.size()) == name_prefix) return i;
    }
    throw ConfigError("CSV has no column '" + std::string(name_prefix) + "'");
}

void write_csv(std::ostream& out, const CsvTable& table) {
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string text;
    bool first = true;
    while (std::getline(in, text)) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!text.empty() && text.back() == ',') cells.emplace_back();
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            if (cells.size() != table.header.size()) throw ConfigError("CSV row width does not match its header");
            table.rows.push_back(std::move(cells));
        }
    }
    if (first) throw ConfigError("CSV input is empty");
    return table;
}

double parse_double(std::string_view text) {
    if (text == "nan") return NAN;
    if (text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ConfigError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace pulsetrain::harness
