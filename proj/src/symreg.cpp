#include "evokit/symreg.hpp"

#include <array>
#include <utility>

#include "evokit/errors.hpp"
#include "evokit/eval/evaluator.hpp"
#include "evokit/gp/creators.hpp"

namespace evokit {

std::vector<OperatorSpec> default_operator_specs() {
    return {
        {"subtree_crossover", 0.9, 2},
        {"subtree_mutation", 0.2, 1},
        {"erc_mutation", 0.05, 1},
    };
}

AlgorithmConfig build_symreg_algorithm(const SymRegConfig& config, RegressionProblem problem,
                                       std::shared_ptr<const gp::FunctionSet> functions,
                                       std::shared_ptr<const gp::TerminalSet> terminals) {
    if (config.population_size < 1) {
        throw ConfigError("population_size must be at least 1");
    }
    if (config.init_depth_lo < 1 || config.init_depth_lo > config.init_depth_hi) {
        throw ConfigError("init_depth needs 1 <= lo <= hi");
    }
    if (config.bloat_weight < 0.0) {
        throw ConfigError("bloat_weight must be non-negative");
    }
    if (config.termination && config.termination->threshold < 0.0) {
        throw ConfigError("termination.threshold must be non-negative");
    }

    if (!functions) {
        functions = std::make_shared<const gp::FunctionSet>(gp::default_function_set());
    }
    if (!terminals) {
        terminals =
            std::make_shared<const gp::TerminalSet>(gp::create_terminal_set(problem.feature_count()));
    }
    if (terminals->variable_count() < problem.feature_count()) {
        throw ConfigError("terminal set covers fewer variables than the problem has features");
    }

    Subpopulation subpopulation;
    subpopulation.population_size = config.population_size;
    subpopulation.higher_is_better = false;
    subpopulation.elitism_rate = config.elitism_rate;
    subpopulation.selection.tournament_size = config.tournament_size;
    subpopulation.evaluator = std::make_shared<const SymbolicRegressionEvaluator>(
        std::move(problem), BloatConfig{config.bloat_weight});
    subpopulation.creator = [lo = config.init_depth_lo, hi = config.init_depth_hi, functions,
                             terminals](Rng& rng) -> Genome {
        return gp::create_ramped_half_and_half(lo, hi, functions, terminals, rng);
    };
    for (const auto& spec : config.operators) {
        if (spec.name == "one_point_crossover" || spec.name == "per_cell_mutation") {
            throw ConfigError("operator '" + spec.name + "' requires vector genomes");
        }
        subpopulation.operator_sequence.push_back(
            make_operator(spec.name, spec.probability, spec.arity));
    }

    AlgorithmConfig algorithm{Population({std::move(subpopulation)})};
    algorithm.max_generation = config.max_generation;
    algorithm.max_workers = config.max_workers;
    algorithm.seed = config.seed;
    if (config.termination) {
        algorithm.termination_checker =
            make_threshold_checker(config.termination->optimal, config.termination->threshold);
    }
    return algorithm;
}

RegressionProblem builtin_symreg_problem() {
    static constexpr std::array<double, 6> axis = {-10.0, -6.0, -2.0, 2.0, 6.0, 10.0};
    constexpr std::size_t samples = 200;
    Matrix features(samples, 3);
    std::vector<double> targets(samples);
    std::size_t row = 0;
    for (double x : axis) {
        for (double y : axis) {
            for (double z : axis) {
                if (row == samples) {
                    break;
                }
                features.at(row, 0) = x;
                features.at(row, 1) = y;
                features.at(row, 2) = z;
                targets[row] = x + 2.0 * y + 3.0 * z;
                ++row;
            }
        }
    }
    return RegressionProblem(std::move(features), std::move(targets));
}

} // namespace evokit
