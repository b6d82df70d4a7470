#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evokit/individual.hpp"
#include "evokit/rng.hpp"

namespace evokit {

/// Transforms a group of individuals in place. Group size equals the
/// operator's arity.
using GeneticOperator = std::function<void(std::span<Individual>, Rng&)>;

/// One step of the breeding pipeline: applied to consecutive groups of
/// `arity` individuals, each group independently with `probability`.
struct OperatorConfig {
    std::string name;
    double probability = 1.0;
    int arity = 1;
    GeneticOperator apply;
};

/// Hard depth limit after variation; an offspring deeper than this is
/// discarded and the parent survives unchanged.
inline constexpr int max_tree_depth = 17;

/// Depth of the fresh subtrees grown by subtree_mutation.
inline constexpr int mutation_subtree_depth = 2;

/// Swaps uniformly chosen subtrees between two tree individuals.
void subtree_crossover(Individual& a, Individual& b, Rng& rng);

/// Replaces a uniformly chosen node with a fresh grow-built subtree.
void subtree_mutation(Individual& individual, Rng& rng);

/// Redraws one uniformly chosen constant leaf from the ERC range. A tree
/// with no constant leaves is left untouched, cached fitness included.
void erc_mutation(Individual& individual, Rng& rng);

void vector_one_point_crossover(Individual& a, Individual& b, Rng& rng);
void vector_per_cell_mutation(Individual& individual, double cell_probability, Rng& rng);

/// Builds a pipeline step by name. Known names: subtree_crossover,
/// subtree_mutation, erc_mutation, one_point_crossover, per_cell_mutation.
/// The declared arity must match the operator's natural arity.
OperatorConfig make_operator(std::string_view name, double probability, int arity);

/// Runs every pipeline step over the pool in order. Consecutive groups of
/// `arity` individuals are transformed with the step's probability; a
/// trailing group smaller than the arity passes through unchanged. The
/// returned pool has exactly the input size.
std::vector<Individual> apply_operator_sequence(std::vector<Individual> pool,
                                                std::span<const OperatorConfig> sequence,
                                                Rng& rng);

} // namespace evokit
