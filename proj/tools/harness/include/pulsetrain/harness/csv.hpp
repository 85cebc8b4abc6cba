#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pulsetrain::harness {

/// Shortest-independent fixed form: 17 significant digits, '.' decimal point,
/// no locale, so identical values always produce identical bytes.
std::string format_double(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(std::string_view name_prefix) const;
};

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

double parse_double(std::string_view text);

}  // namespace pulsetrain::harness
