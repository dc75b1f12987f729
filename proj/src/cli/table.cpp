#include "skhp/cli/table.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace skhp::cli {

std::size_t Table::column(std::string const& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("table has no column '" + name + "'");
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != header.size()) throw std::invalid_argument("table row width does not match header");
    rows.push_back(std::move(row));
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_cell(Cell const& cell) {
    struct {
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(std::string const& v) const { return v; }
    } visitor;
    return std::visit(visitor, cell);
}

namespace {

std::string quote_if_needed(std::string const& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_line(std::ostream& out, std::vector<std::string> const& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << quote_if_needed(fields[i]);
    }
    out << '\n';
}

} // namespace

void write_csv(std::ostream& out, Table const& table) {
    write_line(out, table.header);
    std::vector<std::string> fields;
    for (auto const& row : table.rows) {
        fields.clear();
        for (auto const& cell : row) fields.push_back(format_cell(cell));
        write_line(out, fields);
    }
}

void write_json(std::ostream& out, Table const& table) {
    auto doc = nlohmann::ordered_json::array();
    for (auto const& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            auto const& key = table.header[i];
            std::visit(
                [&](auto const& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v)) {
                            obj[key] = v;
                        } else {
                            obj[key] = nullptr;
                        }
                    } else {
                        obj[key] = v;
                    }
                },
                row[i]);
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

Table read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    char c;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && in.peek() == '\n') in.get(c);
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += c;
        }
    }
    if (quoted) throw std::invalid_argument("csv: unterminated quoted field");
    if (any) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }

    Table table;
    if (records.empty()) return table;
    table.header = records.front();
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].size() != table.header.size()) {
            throw std::invalid_argument("csv: row " + std::to_string(i) + " has " +
                                        std::to_string(records[i].size()) + " fields, header has " +
                                        std::to_string(table.header.size()));
        }
        std::vector<Cell> row(records[i].begin(), records[i].end());
        table.rows.push_back(std::move(row));
    }
    return table;
}

double parse_double(std::string const& text) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
    double value = 0.0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    return value;
}

} // namespace skhp::cli
