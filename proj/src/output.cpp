#include "satrep/output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>

#include "satrep/errors.hpp"

namespace satrep {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(const DataTable& table, std::ostream& out) {
    for (const auto& [key, value] : table.meta) {
        out << "# " << key << ": " << value << "\n";
    }
    bool first = true;
    if (!table.label_column.empty()) {
        out << table.label_column;
        first = false;
    }
    for (const std::string& column : table.columns) {
        if (!first) out << ",";
        out << column;
        first = false;
    }
    out << "\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        bool first_cell = true;
        if (!table.label_column.empty()) {
            out << (r < table.row_labels.size() ? table.row_labels[r] : "");
            first_cell = false;
        }
        for (const auto& cell : table.rows[r]) {
            if (!first_cell) out << ",";
            if (cell.has_value()) out << format_number(*cell);
            first_cell = false;
        }
        out << "\n";
    }
}

void write_json(const DataTable& table, std::ostream& out) {
    out << "{\n  \"meta\": {";
    for (std::size_t i = 0; i < table.meta.size(); ++i) {
        if (i > 0) out << ",";
        out << "\n    \"" << json_escape(table.meta[i].first) << "\": \""
            << json_escape(table.meta[i].second) << "\"";
    }
    out << "\n  },\n";
    if (!table.label_column.empty()) {
        out << "  \"label_column\": \"" << json_escape(table.label_column)
            << "\",\n  \"row_labels\": [";
        for (std::size_t i = 0; i < table.row_labels.size(); ++i) {
            if (i > 0) out << ", ";
            out << "\"" << json_escape(table.row_labels[i]) << "\"";
        }
        out << "],\n";
    }
    out << "  \"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << ", ";
        out << "\"" << json_escape(table.columns[i]) << "\"";
    }
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r > 0) out << ",";
        out << "\n    [";
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c > 0) out << ", ";
            if (table.rows[r][c].has_value()) {
                out << format_number(*table.rows[r][c]);
            } else {
                out << "null";
            }
        }
        out << "]";
    }
    out << "\n  ]\n}\n";
}

void emit_result(const DataTable& table, const std::string& format,
                 const std::string& path) {
    if (format != "csv" && format != "json") {
        throw ConfigError("output format must be 'csv' or 'json', got '" +
                          format + "'");
    }
    const auto write = [&](std::ostream& out) {
        if (format == "csv") {
            write_csv(table, out);
        } else {
            write_json(table, out);
        }
    };
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output path: " + path);
    write(out);
    out.flush();
    if (!out) throw ConfigError("failed writing output path: " + path);
}

} // namespace satrep
