#pragma once

#include <filesystem>
#include <span>

#include "evokit/engine/statistics.hpp"
#include "evokit/eval/regression.hpp"

namespace evokit::cli {

/// Loads a regression dataset: every column but the last is a feature, the
/// last is the target. A non-numeric first row is treated as a header.
/// Throws DatasetError on missing files, fewer than 2 columns, ragged rows
/// or non-numeric cells (naming the line).
RegressionProblem load_dataset_csv(const std::filesystem::path& path);

/// Writes `generation,best,average,worst` plus one full-precision row per
/// generation, newline-terminated.
void write_stats_csv(std::span<const GenerationStats> rows, const std::filesystem::path& path);

} // namespace evokit::cli
