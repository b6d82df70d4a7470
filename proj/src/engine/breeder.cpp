#include "evokit/engine/breeder.hpp"

#include <iterator>
#include <utility>

#include "evokit/errors.hpp"
#include "evokit/variation/selection.hpp"

namespace evokit {

std::vector<Individual> SimpleBreeder::breed_next_generation(const Subpopulation& subpopulation,
                                                             Rng& rng, IdAllocator& ids) const {
    std::size_t target = subpopulation.population_size;
    if (target == 0) {
        throw ConfigError("breed_next_generation: population_size is zero");
    }
    if (subpopulation.individuals.size() != target) {
        throw Error("breed_next_generation: subpopulation size drifted from population_size");
    }

    std::vector<Individual> next = apply_elitism(subpopulation, ids);
    std::size_t remainder = target - next.size();
    if (remainder > 0) {
        std::vector<Individual> pool = tournament_select(
            subpopulation, subpopulation.selection.tournament_size, remainder, rng, ids);
        pool = apply_operator_sequence(std::move(pool), subpopulation.operator_sequence, rng);
        next.insert(next.end(), std::make_move_iterator(pool.begin()),
                    std::make_move_iterator(pool.end()));
    }
    return next;
}

} // namespace evokit
