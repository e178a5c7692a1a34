#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace satrep {

inline constexpr const char* kToolVersion = "1.0.0";

// Plot-ready table: '#' metadata lines, a header row, numeric cells.
// Missing cells (failed evaluations, out-of-domain points) stay empty.
// An optional label column carries per-row quantity names.
struct DataTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::string label_column; // empty when rows are unlabeled
    std::vector<std::string> row_labels;
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

// 17 significant digits; regression tests compare output byte-for-byte.
std::string format_number(double value);

void write_csv(const DataTable& table, std::ostream& out);
void write_json(const DataTable& table, std::ostream& out);

// format is "csv" or "json"; an empty path writes to stdout.
void emit_result(const DataTable& table, const std::string& format,
                 const std::string& path);

} // namespace satrep
