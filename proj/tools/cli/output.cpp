#include "cli/output.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace heisenring::cli {
namespace {

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return format_real(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c);
}

// Shorter rendering for aligned human-readable output.
std::string cell_display(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (*d != 0.0 && (std::abs(*d) < 1e-3 || std::abs(*d) >= 1e7)) return fmt::format("{:.3e}", *d);
        return fmt::format("{:.10g}", *d);
    }
    return cell_text(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return v;
            } else return v;
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", x);
}

void write_csv(const Document& doc, std::ostream& os) {
    const bool sections = doc.tables.size() > 1;
    for (std::size_t t = 0; t < doc.tables.size(); ++t) {
        const auto& table = doc.tables[t];
        if (t > 0) os << '\n';
        if (sections) os << "# " << table.name << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_escape(table.columns[i]);
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
            os << '\n';
        }
    }
}

void write_json(const Document& doc, std::ostream& os) {
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    for (const auto& table : doc.tables) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
                obj[table.columns[i]] = cell_json(row[i]);
            rows.push_back(std::move(obj));
        }
        root[table.name] = std::move(rows);
    }
    for (const auto& [key, value] : doc.extra.items()) root[key] = value;
    os << root.dump(2) << '\n';
}

void write_table(const Document& doc, std::ostream& os) {
    for (std::size_t t = 0; t < doc.tables.size(); ++t) {
        const auto& table = doc.tables[t];
        if (t > 0) os << '\n';
        if (!table.title.empty()) os << table.title << '\n';

        std::vector<std::size_t> width(table.columns.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
        std::vector<std::vector<std::string>> text;
        for (const auto& row : table.rows) {
            auto& line = text.emplace_back();
            for (std::size_t i = 0; i < row.size(); ++i) {
                line.push_back(cell_display(row[i]));
                if (i < width.size()) width[i] = std::max(width[i], line.back().size());
            }
        }
        auto emit = [&](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) line += "  ";
                line += fmt::format("{:>{}}", cells[i], i < width.size() ? width[i] : 0);
            }
            os << line << '\n';
        };
        emit(table.columns);
        std::size_t total = 0;
        for (auto w : width) total += w;
        os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
        for (const auto& line : text) emit(line);
    }
    if (!doc.summary.empty()) {
        os << '\n';
        for (const auto& s : doc.summary) os << s << '\n';
    }
}

void write(const Document& doc, Format format, std::ostream& os) {
    switch (format) {
    case Format::csv: write_csv(doc, os); break;
    case Format::json: write_json(doc, os); break;
    case Format::table: write_table(doc, os); break;
    }
}

} // namespace heisenring::cli
