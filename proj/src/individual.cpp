#include "evokit/individual.hpp"

#include <cmath>
#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

Individual::Individual(Genome genome, std::uint64_t id, bool higher_is_better)
    : genome_(std::move(genome)), id_(id) {
    fitness_.higher_is_better = higher_is_better;
}

Genome& Individual::mutable_genome() {
    invalidate_fitness();
    return genome_;
}

void Individual::assign_fitness(double value, double penalty) {
    if (!std::isfinite(value) || !std::isfinite(penalty)) {
        throw Error("assign_fitness: non-finite fitness");
    }
    fitness_.value = value;
    fitness_.penalty = penalty;
    fitness_.is_evaluated = true;
}

void Individual::invalidate_fitness() {
    fitness_.is_evaluated = false;
}

Individual Individual::clone(IdAllocator& ids) const {
    Individual copy(genome_, ids.allocate(), fitness_.higher_is_better);
    copy.fitness_ = fitness_;
    return copy;
}

const gp::TreeGenome& tree_genome(const Individual& individual) {
    if (const auto* tree = std::get_if<gp::TreeGenome>(&individual.genome())) {
        return *tree;
    }
    throw Error("expected a tree genome");
}

gp::TreeGenome& tree_genome(Individual& individual) {
    if (!std::holds_alternative<gp::TreeGenome>(individual.genome())) {
        throw Error("expected a tree genome");
    }
    return std::get<gp::TreeGenome>(individual.mutable_genome());
}

const ga::VectorGenome& vector_genome(const Individual& individual) {
    if (const auto* vec = std::get_if<ga::VectorGenome>(&individual.genome())) {
        return *vec;
    }
    throw Error("expected a vector genome");
}

ga::VectorGenome& vector_genome(Individual& individual) {
    if (!std::holds_alternative<ga::VectorGenome>(individual.genome())) {
        throw Error("expected a vector genome");
    }
    return std::get<ga::VectorGenome>(individual.mutable_genome());
}

} // namespace evokit
