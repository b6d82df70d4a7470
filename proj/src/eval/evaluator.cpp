#include "evokit/eval/evaluator.hpp"

#include <cmath>
#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

SymbolicRegressionEvaluator::SymbolicRegressionEvaluator(RegressionProblem problem,
                                                         BloatConfig bloat, bool higher_is_better)
    : problem_(std::move(problem)), bloat_(bloat), higher_is_better_(higher_is_better) {
    if (bloat_.bloat_weight < 0.0) {
        throw ConfigError("bloat_weight must be non-negative");
    }
}

double SymbolicRegressionEvaluator::evaluate(const Individual& individual) const {
    return symreg_error(tree_genome(individual), problem_);
}

double SymbolicRegressionEvaluator::penalty(const Individual& individual) const {
    double raw = apply_bloat_penalty(0.0, tree_genome(individual).size(), bloat_,
                                     higher_is_better_);
    return raw;
}

Fitness evaluate_individual(const IndividualEvaluator& evaluator, Individual& individual) {
    if (individual.fitness().is_evaluated) {
        return individual.fitness();
    }
    double objective = evaluator.evaluate(individual);
    if (!std::isfinite(objective)) {
        individual.assign_fitness(worst_fitness_value(individual.fitness().higher_is_better), 0.0);
    } else {
        individual.assign_fitness(objective, evaluator.penalty(individual));
    }
    return individual.fitness();
}

} // namespace evokit
