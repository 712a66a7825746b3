// Command orchestration shared by the CLI and the tests.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgqed/config.hpp"
#include "wgqed/table.hpp"

namespace wgqed {

enum class Command { spectrum, features, count, invert, sense };

Command parse_command(const std::string& name);
std::string command_name(Command cmd);

struct RunOptions {
    std::optional<std::size_t> grid_points;  ///< overrides the config grid density
};

struct RunOutput {
    ResultTable table;
    std::vector<std::string> diagnostics;  ///< warnings for stderr
};

/// Execute one command against a parsed scenario. Throws ValidationError on
/// inconsistent configuration and NumericalError (subclasses) on solver or
/// measurement failures; on success the same config yields byte-identical
/// tables.
RunOutput run_command(Command cmd, const ScenarioConfig& config,
                      const RunOptions& options = {});

}  // namespace wgqed
