#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "evokit/symreg.hpp"

namespace evokit::cli {

/// What a run optimizes against: the builtin linear lattice problem or a
/// CSV dataset whose last column is the target.
struct ProblemSpec {
    enum class Kind { builtin_symreg, csv_regression };

    Kind kind = Kind::builtin_symreg;
    std::string csv_path;

    bool operator==(const ProblemSpec&) const = default;
};

/// Full declarative description of one run, as loaded from a config file.
struct ExperimentConfig {
    ProblemSpec problem;
    SymRegConfig run{.termination = std::nullopt};

    bool operator==(const ExperimentConfig&) const = default;
};

/// Parses the flat `key = value` config document. Keys: problem,
/// population_size, init_depth.lo, init_depth.hi, elitism_rate,
/// bloat_weight, operators (comma-separated name:probability:arity),
/// tournament_size, max_generation, max_workers, termination.optimal,
/// termination.threshold, seed. `#` starts a comment. Unknown or duplicate
/// keys, malformed values and out-of-range numbers raise ConfigError.
/// Every key is optional except that the two termination keys must appear
/// together; a config without them runs to max_generation.
ExperimentConfig parse_experiment_config(std::string_view text);

/// Inverse of parse_experiment_config (field-by-field round trip).
std::string serialize_experiment_config(const ExperimentConfig& config);

ExperimentConfig load_experiment_config(const std::filesystem::path& path);

} // namespace evokit::cli
