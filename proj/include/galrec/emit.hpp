#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace galrec::emit {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Series {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip decimal form, "." separator, locale independent.
std::string format_number(double v);

/// RFC-4180: header row, quoting only where needed, LF line endings.
std::string to_csv(const Series& s);

/// {claim_id, schema_version: 1, columns: [...], rows: [[...]]}
std::string to_json(const std::string& claim_id, const Series& s);

void write_file(const std::string& path, const std::string& content);

}  // namespace galrec::emit
