#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evokit/population.hpp"

namespace evokit {

/// ceil(elitism_rate * population_size), with a tiny nearest-integer snap
/// so binary rounding noise cannot inflate the count by one.
std::size_t elite_count(double elitism_rate, std::size_t population_size);

/// Best contestant by better_than; ties go to the lowest id. `contestants`
/// holds indices into the subpopulation.
std::size_t tournament_winner(const Subpopulation& subpopulation,
                              std::span<const std::size_t> contestants);

/// Repeats `count` times: draw `tournament_size` individuals uniformly
/// with replacement and clone the winner. Requires a fully evaluated
/// subpopulation.
std::vector<Individual> tournament_select(const Subpopulation& subpopulation, int tournament_size,
                                          std::size_t count, Rng& rng, IdAllocator& ids);

/// Clones of the top elite_count(...) individuals, best first; fitness
/// stays marked evaluated.
std::vector<Individual> apply_elitism(const Subpopulation& subpopulation, IdAllocator& ids);

} // namespace evokit
