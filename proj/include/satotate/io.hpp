#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "satotate/bigint.hpp"

namespace satotate {

// Deterministic table emission.  Reals always go through "%.12g" (12
// significant digits), integers and big integers print in decimal, booleans
// as true/false; the same invocation must produce byte-identical output.

using Cell = std::variant<int64_t, double, bool, std::string, BigInt>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace detail {

inline std::string cell_text(const Cell& c) {
    if (auto* i = std::get_if<int64_t>(&c)) return std::to_string(*i);
    if (auto* d = std::get_if<double>(&c)) return format_real(*d);
    if (auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    if (auto* s = std::get_if<std::string>(&c)) return *s;
    return std::get<BigInt>(c).str();
}

// Strings are quoted in JSON; every other cell type is a bare token.
inline std::string cell_json(const Cell& c) {
    if (auto* s = std::get_if<std::string>(&c)) {
        std::string out = "\"";
        for (char ch : *s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        out += '"';
        return out;
    }
    return cell_text(c);
}

}  // namespace detail

inline void write_csv(const Table& t, std::ostream& os) {
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::logic_error("write_csv: row width mismatch");
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << detail::cell_text(row[i]);
        os << "\n";
    }
}

inline void write_json(const Table& t, std::ostream& os) {
    if (t.rows.empty()) {
        os << "[]\n";
        return;
    }
    os << "[\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.size() != t.columns.size())
            throw std::logic_error("write_json: row width mismatch");
        os << "{";
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << "\"" << t.columns[i] << "\":" << detail::cell_json(row[i]);
        }
        os << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
}

}  // namespace satotate
