#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evokit/engine/evolution.hpp"
#include "evokit/eval/regression.hpp"
#include "evokit/gp/primitives.hpp"

namespace evokit {

/// Declarative pipeline step: resolved into an OperatorConfig by name.
struct OperatorSpec {
    std::string name;
    double probability = 1.0;
    int arity = 1;

    bool operator==(const OperatorSpec&) const = default;
};

/// subtree_crossover 0.9/2, subtree_mutation 0.2/1, erc_mutation 0.05/1.
std::vector<OperatorSpec> default_operator_specs();

/// Knobs for one tree-GP symbolic-regression run. Defaults give a
/// 200-individual run with ramped (2,4) initialization, light bloat
/// pressure and a 0.001 stop threshold on the raw error.
struct SymRegConfig {
    std::size_t population_size = 200;
    int init_depth_lo = 2;
    int init_depth_hi = 4;
    double elitism_rate = 0.05;
    double bloat_weight = 1e-4;
    std::vector<OperatorSpec> operators = default_operator_specs();
    int tournament_size = 4;
    int max_generation = 500;
    int max_workers = 1;
    std::optional<ThresholdTermination> termination = ThresholdTermination{0.0, 0.001};
    std::uint64_t seed = 0;

    bool operator==(const SymRegConfig&) const = default;
};

/// Assembles a single-subpopulation minimization run over `problem`.
/// Defaults: add/sub/mul/div functions, one variable per feature column.
/// Vector-genome operator names are rejected here with a ConfigError.
AlgorithmConfig build_symreg_algorithm(const SymRegConfig& config, RegressionProblem problem,
                                       std::shared_ptr<const gp::FunctionSet> functions = nullptr,
                                       std::shared_ptr<const gp::TerminalSet> terminals = nullptr);

/// Builtin reference problem: f(x, y, z) = x + 2y + 3z sampled on a
/// deterministic 200-point lattice in [-10, 10]^3 (first 200 points of a
/// 6x6x6 grid). Pairs with default_terminal_set().
RegressionProblem builtin_symreg_problem();

} // namespace evokit
