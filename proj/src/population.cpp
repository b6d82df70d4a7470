#include "evokit/population.hpp"

#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

Population::Population(std::vector<Subpopulation> subpopulations)
    : subpopulations_(std::move(subpopulations)) {
    if (subpopulations_.empty()) {
        throw ConfigError("Population: needs at least one subpopulation");
    }
}

} // namespace evokit
