#include "evokit/engine/termination.hpp"

#include <cmath>

#include "evokit/errors.hpp"

namespace evokit {

bool check_termination_threshold(const Fitness& best, double optimal, double threshold) {
    if (threshold < 0.0) {
        throw ConfigError("termination threshold must be non-negative");
    }
    if (!best.is_evaluated) {
        throw Error("check_termination_threshold: unevaluated fitness");
    }
    return std::fabs(best.value - optimal) <= threshold;
}

TerminationChecker make_threshold_checker(double optimal, double threshold) {
    if (threshold < 0.0) {
        throw ConfigError("termination threshold must be non-negative");
    }
    return [optimal, threshold](const Individual& best, int) {
        return check_termination_threshold(best.fitness(), optimal, threshold);
    };
}

} // namespace evokit
