#pragma once

#include <functional>

#include "evokit/fitness.hpp"
#include "evokit/individual.hpp"

namespace evokit {

/// Early-stop rule: the run ends once the best raw objective is within
/// `threshold` of `optimal`.
struct ThresholdTermination {
    double optimal = 0.0;
    double threshold = 0.0;

    bool operator==(const ThresholdTermination&) const = default;
};

/// True iff |best.value - optimal| <= threshold. The raw objective is
/// checked, not the penalty-adjusted selection value. Throws Error on
/// unevaluated fitness, ConfigError on negative threshold.
bool check_termination_threshold(const Fitness& best, double optimal, double threshold);

/// Consulted once per generation, after statistics, with the all-time best
/// individual. Empty checker: run to max_generation.
using TerminationChecker = std::function<bool(const Individual& best, int generation)>;

TerminationChecker make_threshold_checker(double optimal, double threshold);

} // namespace evokit
