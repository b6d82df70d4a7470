#pragma once

#include <cstdint>
#include <variant>

#include "evokit/fitness.hpp"
#include "evokit/ga/vector.hpp"
#include "evokit/gp/tree.hpp"

namespace evokit {

using Genome = std::variant<gp::TreeGenome, ga::VectorGenome>;

/// Hands out the sequential ids that make run traces reproducible. One
/// allocator per run.
class IdAllocator {
public:
    std::uint64_t allocate() { return next_++; }

private:
    std::uint64_t next_ = 0;
};

class Individual {
public:
    Individual(Genome genome, std::uint64_t id, bool higher_is_better);

    std::uint64_t id() const { return id_; }

    const Genome& genome() const { return genome_; }

    /// Mutable access marks the cached fitness stale.
    Genome& mutable_genome();

    const Fitness& fitness() const { return fitness_; }

    void assign_fitness(double value, double penalty = 0.0);
    void invalidate_fitness();

    /// Equal genome and fitness state, fresh id.
    Individual clone(IdAllocator& ids) const;

private:
    Genome genome_;
    Fitness fitness_;
    std::uint64_t id_;
};

/// Narrowing genome accessors with domain errors instead of
/// bad_variant_access. The mutable forms invalidate fitness.
const gp::TreeGenome& tree_genome(const Individual& individual);
gp::TreeGenome& tree_genome(Individual& individual);
const ga::VectorGenome& vector_genome(const Individual& individual);
ga::VectorGenome& vector_genome(Individual& individual);

} // namespace evokit
