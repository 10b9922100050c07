#include "cli/options.hpp"

#include <heisenring/errors.hpp>
#include <heisenring/hamiltonian.hpp>

#include <charconv>
#include <cmath>

namespace heisenring::cli {
namespace {

int parse_int(std::string_view s, const std::string& whole) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ArgumentError("invalid qubit count or range: '" + whole + "'");
    return v;
}

} // namespace

std::vector<int> QubitRange::values() const {
    std::vector<int> out;
    for (int n = first; n <= last; ++n) out.push_back(n);
    return out;
}

QubitRange parse_qubit_range(const std::string& text) {
    QubitRange r;
    const std::string_view s = text;
    if (auto dots = s.find(".."); dots != std::string_view::npos) {
        r.first = parse_int(s.substr(0, dots), text);
        r.last = parse_int(s.substr(dots + 2), text);
    } else if (auto dash = s.find('-'); dash != std::string_view::npos && dash > 0) {
        r.first = parse_int(s.substr(0, dash), text);
        r.last = parse_int(s.substr(dash + 1), text);
    } else {
        r.first = r.last = parse_int(s, text);
    }
    if (r.first < 2 || r.last > kMaxQubits || r.first > r.last)
        throw ArgumentError("qubit range must lie within [2, " + std::to_string(kMaxQubits) + "]: '" + text + "'");
    return r;
}

Command parse_command(const std::string& text) {
    if (text == "spectrum") return Command::spectrum;
    if (text == "concurrence") return Command::concurrence;
    if (text == "threshold") return Command::threshold;
    if (text == "ghz") return Command::ghz;
    if (text == "fig1") return Command::fig1;
    if (text == "tables") return Command::tables;
    if (text == "verify") return Command::verify;
    throw ArgumentError("unknown command '" + text + "'");
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    if (text == "table") return Format::table;
    throw ArgumentError("unknown format '" + text + "' (expected csv, json or table)");
}

const char* to_string(Command c) {
    switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::concurrence: return "concurrence";
    case Command::threshold: return "threshold";
    case Command::ghz: return "ghz";
    case Command::fig1: return "fig1";
    case Command::tables: return "tables";
    case Command::verify: return "verify";
    }
    return "?";
}

const char* to_string(Format f) {
    switch (f) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::table: return "table";
    }
    return "?";
}

Format default_format(Command c) {
    switch (c) {
    case Command::tables: return Format::table;
    case Command::verify: return Format::json;
    default: return Format::csv;
    }
}

Grid resolve_grid(const RunConfig& config, Grid defaults) {
    Grid g{config.t_min.value_or(defaults.t_min), config.t_max.value_or(defaults.t_max),
           config.steps.value_or(defaults.steps)};
    if (!(g.t_min > 0.0) || !std::isfinite(g.t_min)) throw ArgumentError("--t-min must be positive");
    if (!(g.t_max >= g.t_min) || !std::isfinite(g.t_max)) throw ArgumentError("--t-max must be >= --t-min");
    if (g.steps < 2) throw ArgumentError("--steps must be at least 2");
    return g;
}

std::vector<double> log_grid(const Grid& grid) {
    std::vector<double> t(static_cast<std::size_t>(grid.steps));
    const double a = std::log(grid.t_min);
    const double b = std::log(grid.t_max);
    for (int i = 0; i < grid.steps; ++i) t[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (grid.steps - 1));
    t.front() = grid.t_min;
    t.back() = grid.t_max;
    return t;
}

} // namespace heisenring::cli
