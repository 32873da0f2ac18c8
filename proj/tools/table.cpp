#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rqi::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table: row width does not match the schema");
    }
    rows.push_back(std::move(row));
}

bool Table::has_non_finite() const {
    for (const auto& row : rows) {
        for (const auto& cell : row) {
            if (const double* d = std::get_if<double>(&cell)) {
                if (!std::isfinite(*d)) return true;
            }
        }
    }
    return false;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) return format_double(*d);
    if (const long long* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    return csv_quote(std::get<std::string>(cell));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_table(const Table& table, const nlohmann::ordered_json& params,
                const std::string& format, const std::string& path) {
    if (format == "csv") {
        std::string text;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) text += ',';
            text += csv_quote(table.columns[c]);
        }
        text += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) text += ',';
                text += cell_text(row[c]);
            }
            text += '\n';
        }
        write_file(path, text);
        return;
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["params"] = params;
        doc["columns"] = table.columns;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
            for (const auto& cell : row) {
                if (const double* d = std::get_if<double>(&cell)) {
                    jrow.push_back(*d);
                } else if (const long long* i = std::get_if<long long>(&cell)) {
                    jrow.push_back(*i);
                } else {
                    jrow.push_back(std::get<std::string>(cell));
                }
            }
            doc["rows"].push_back(std::move(jrow));
        }
        write_file(path, doc.dump(2) + "\n");
        return;
    }
    throw std::invalid_argument("emit_table: format must be csv or json");
}

void emit_manifest(const nlohmann::ordered_json& manifest, const std::string& path) {
    write_file(path + ".manifest.json", manifest.dump(2) + "\n");
}

}  // namespace rqi::cli
