#pragma once

// Row tables shared by every command, with CSV and JSON writers and a CSV reader.
//
// Doubles are written with 17 significant digits so that reading them back
// reproduces the same bits.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace skhp::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    /// Index of a header column; throws std::out_of_range if absent.
    std::size_t column(std::string const& name) const;
    /// Appends a row; its width must match the header.
    void add(std::vector<Cell> row);
};

/// %.17g, with "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double value);
std::string format_cell(Cell const& cell);

void write_csv(std::ostream& out, Table const& table);
/// Array of row objects; non-finite doubles become null.
void write_json(std::ostream& out, Table const& table);

/// RFC-4180 reader (quoted fields, doubled quotes). All cells come back as strings.
Table read_csv(std::istream& in);

/// Parses a whole cell as a double ("nan" and "inf" included); throws std::invalid_argument.
double parse_double(std::string const& text);

} // namespace skhp::cli
