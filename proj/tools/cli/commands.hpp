#pragma once

#include "cli/options.hpp"
#include "cli/output.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace heisenring::cli {

struct CommandResult {
    Document doc;
    int exit_code = kExitOk;
    std::vector<std::string> failures;
};

[[nodiscard]] CommandResult cmd_spectrum(const RunConfig& config);
[[nodiscard]] CommandResult cmd_concurrence(const RunConfig& config);
[[nodiscard]] CommandResult cmd_threshold(const RunConfig& config);
[[nodiscard]] CommandResult cmd_ghz(const RunConfig& config);
[[nodiscard]] CommandResult cmd_fig1(const RunConfig& config);
[[nodiscard]] CommandResult cmd_tables(const RunConfig& config);
[[nodiscard]] CommandResult cmd_verify(const RunConfig& config);

/// Dispatches on config.command. Engine exceptions propagate.
[[nodiscard]] CommandResult execute(const RunConfig& config);

/// Executes and writes the output (to --out when given). Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; argument errors map to exit code 1.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace heisenring::cli
