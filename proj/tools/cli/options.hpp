#pragma once

#include <optional>
#include <string>
#include <vector>

namespace heisenring::cli {

enum class Command { spectrum, concurrence, threshold, ghz, fig1, tables, verify };
enum class Format { csv, json, table };

enum ExitCode : int {
    kExitOk = 0,
    kExitArgument = 1,
    kExitVerification = 2,
    kExitNumerical = 3,
};

struct QubitRange {
    int first = 0;
    int last = 0;

    [[nodiscard]] std::vector<int> values() const;
};

struct Tolerances {
    double ground_concurrence = 5e-4;
    double threshold = 1e-6;
    double ghz_fidelity = 5e-4;
    double limit_estimate = 5e-4;
};

struct RunConfig {
    Command command = Command::tables;
    std::optional<QubitRange> n;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::optional<int> steps;
    std::optional<Format> format;
    bool exhaustive_ghz = false;
    std::optional<std::string> out;
    Tolerances tolerances;
};

/// "7", "2-11" or "2..11".
[[nodiscard]] QubitRange parse_qubit_range(const std::string& text);

[[nodiscard]] Command parse_command(const std::string& text);
[[nodiscard]] Format parse_format(const std::string& text);
[[nodiscard]] const char* to_string(Command c);
[[nodiscard]] const char* to_string(Format f);

/// Format used when --format is absent.
[[nodiscard]] Format default_format(Command c);

/// Temperature grid in a RunConfig, resolved against per-command defaults.
struct Grid {
    double t_min;
    double t_max;
    int steps;
};

[[nodiscard]] Grid resolve_grid(const RunConfig& config, Grid defaults);

/// Log-spaced, both ends included.
[[nodiscard]] std::vector<double> log_grid(const Grid& grid);

} // namespace heisenring::cli
