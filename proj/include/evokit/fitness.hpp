#pragma once

namespace evokit {

/// Scalar fitness with an optimization direction.
///
/// `value` is the raw objective in problem units (e.g. mean absolute
/// error). `penalty` is a signed adjustment, such as a bloat penalty, that
/// participates in individual-vs-individual comparisons but is excluded
/// from termination checks and reported objectives.
struct Fitness {
    double value = 0.0;
    double penalty = 0.0;
    bool is_evaluated = false;
    bool higher_is_better = false;

    /// The quantity compared when ranking individuals.
    double selection_value() const { return value + penalty; }
};

/// Strict preference: true iff `a` beats `b` under their shared direction.
/// Equal selection values compare as not-better either way. Throws Error
/// when either operand is unevaluated or the direction flags differ.
bool better_than(const Fitness& a, const Fitness& b);

/// Sentinel assigned when evaluation fails (e.g. non-finite output). Kept
/// finite so the evaluated-fitness finiteness invariant holds.
double worst_fitness_value(bool higher_is_better);

} // namespace evokit
