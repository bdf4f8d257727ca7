#include "galrec/emit.hpp"

#include <charconv>
#include <fstream>

#include "galrec/errors.hpp"
#include "json.hpp"

namespace galrec::emit {

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
    if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
    return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Series& s) {
    std::string out;
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(s.columns[i]);
    }
    out += '\n';
    for (const auto& row : s.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_quote(cell_to_string(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const std::string& claim_id, const Series& s) {
    nlohmann::json j;
    j["claim_id"] = claim_id;
    j["schema_version"] = 1;
    j["columns"] = s.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : s.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) {
            if (std::holds_alternative<double>(c)) r.push_back(std::get<double>(c));
            else if (std::holds_alternative<std::int64_t>(c)) r.push_back(std::get<std::int64_t>(c));
            else r.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace galrec::emit
