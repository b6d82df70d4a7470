#include "evokit/fitness.hpp"

#include "evokit/errors.hpp"

namespace evokit {

bool better_than(const Fitness& a, const Fitness& b) {
    if (!a.is_evaluated || !b.is_evaluated) {
        throw Error("better_than: cannot compare unevaluated fitness");
    }
    if (a.higher_is_better != b.higher_is_better) {
        throw Error("better_than: fitness direction mismatch");
    }
    const double lhs = a.selection_value();
    const double rhs = b.selection_value();
    return a.higher_is_better ? lhs > rhs : lhs < rhs;
}

double worst_fitness_value(bool higher_is_better) {
    constexpr double magnitude = 1e30;
    return higher_is_better ? -magnitude : magnitude;
}

} // namespace evokit
