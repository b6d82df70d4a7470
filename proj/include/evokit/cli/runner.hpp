#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>

namespace evokit::cli {

/// Command-line overrides beat config-file values.
struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> max_generation;
    std::optional<std::filesystem::path> out_dir;
};

/// Loads the config, runs the experiment and writes stats.csv,
/// best_tree.txt and summary.txt into the output directory (default:
/// current directory). Prints the final best fitness to `out`. Returns a
/// process exit status: 0 success, 1 user error (with a diagnostic on
/// `err`), 2 internal error.
int run_experiment(const std::filesystem::path& config_path, const RunOverrides& overrides = {},
                   std::ostream& out = std::cout, std::ostream& err = std::cerr);

} // namespace evokit::cli
