#pragma once

#include "cli/options.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace heisenring::cli {

/// Empty cell, integer, real, text or flag.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct DataTable {
    std::string name;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// Everything one command emits. `summary` lines are shown by the table
/// format; `extra` is merged into the JSON object.
struct Document {
    std::vector<DataTable> tables;
    std::vector<std::string> summary;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

/// Reals are written with 17 significant digits.
[[nodiscard]] std::string format_real(double x);

void write_csv(const Document& doc, std::ostream& os);
void write_json(const Document& doc, std::ostream& os);
void write_table(const Document& doc, std::ostream& os);
void write(const Document& doc, Format format, std::ostream& os);

} // namespace heisenring::cli
