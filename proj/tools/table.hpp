// Deterministic table emission for the sweep CLI: RFC-4180 CSV with 12
// significant digits, or JSON with stable key order, plus a manifest echo
// that captures every input needed for a bit-exact rerun.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rqi::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    bool has_non_finite() const;
};

std::string format_double(double v);  // %.12g

// Writes the table to `path` in "csv" or "json" format. The JSON layout is
// {"params": ..., "rows": [...]} with insertion-ordered keys.
void emit_table(const Table& table, const nlohmann::ordered_json& params,
                const std::string& format, const std::string& path);

// Writes <path>.manifest.json echoing all inputs.
void emit_manifest(const nlohmann::ordered_json& manifest, const std::string& path);

}  // namespace rqi::cli
