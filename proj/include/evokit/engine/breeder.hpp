#pragma once

#include <vector>

#include "evokit/population.hpp"

namespace evokit {

/// Turns an evaluated generation into the next one.
class Breeder {
public:
    virtual ~Breeder() = default;
    virtual std::vector<Individual> breed_next_generation(const Subpopulation& subpopulation,
                                                          Rng& rng, IdAllocator& ids) const = 0;
};

/// Generational breeding: elites pass through unchanged, the remainder is
/// tournament-selected and pushed through the operator pipeline. Output
/// size always equals population_size.
class SimpleBreeder final : public Breeder {
public:
    std::vector<Individual> breed_next_generation(const Subpopulation& subpopulation, Rng& rng,
                                                  IdAllocator& ids) const override;
};

} // namespace evokit
