#pragma once

#include "evokit/eval/regression.hpp"
#include "evokit/individual.hpp"

namespace evokit {

/// Computes the objective for one individual. Implementations must be pure
/// and thread-safe: no randomness, no shared mutable state. That is what
/// makes parallel evaluation bit-for-bit reproducible.
class IndividualEvaluator {
public:
    virtual ~IndividualEvaluator() = default;

    /// Raw objective in problem units.
    virtual double evaluate(const Individual& individual) const = 0;

    /// Signed adjustment folded into selection comparisons (default none).
    virtual double penalty(const Individual& individual) const {
        (void)individual;
        return 0.0;
    }
};

/// Mean-absolute-error evaluator over a regression dataset, with an
/// optional bloat penalty on tree size.
class SymbolicRegressionEvaluator final : public IndividualEvaluator {
public:
    explicit SymbolicRegressionEvaluator(RegressionProblem problem, BloatConfig bloat = {},
                                         bool higher_is_better = false);

    double evaluate(const Individual& individual) const override;
    double penalty(const Individual& individual) const override;

    const RegressionProblem& problem() const { return problem_; }
    const BloatConfig& bloat() const { return bloat_; }

private:
    RegressionProblem problem_;
    BloatConfig bloat_;
    bool higher_is_better_;
};

/// Returns the (possibly cached) fitness of `individual`, computing and
/// storing it when stale. A non-finite objective is replaced by the worst
/// possible fitness instead of aborting the run.
Fitness evaluate_individual(const IndividualEvaluator& evaluator, Individual& individual);

} // namespace evokit
