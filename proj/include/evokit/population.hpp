#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "evokit/individual.hpp"
#include "evokit/rng.hpp"
#include "evokit/variation/operators.hpp"

namespace evokit {

class IndividualEvaluator;

enum class SelectionMethod { tournament };

struct SelectionConfig {
    SelectionMethod method = SelectionMethod::tournament;
    int tournament_size = 4;
};

using GenomeCreator = std::function<Genome(Rng&)>;

/// One independently configured breeding pool: its individuals plus the
/// creator, evaluator, selection and operator pipeline that drive them.
struct Subpopulation {
    std::vector<Individual> individuals;
    std::size_t population_size = 0;
    std::shared_ptr<const IndividualEvaluator> evaluator;
    GenomeCreator creator;
    std::vector<OperatorConfig> operator_sequence;
    SelectionConfig selection;
    double elitism_rate = 0.0;
    bool higher_is_better = false;
};

/// Ordered, never-empty collection of subpopulations.
class Population {
public:
    explicit Population(std::vector<Subpopulation> subpopulations);

    std::size_t subpopulation_count() const { return subpopulations_.size(); }
    Subpopulation& subpopulation(std::size_t index) { return subpopulations_.at(index); }
    const Subpopulation& subpopulation(std::size_t index) const { return subpopulations_.at(index); }
    std::span<Subpopulation> subpopulations() { return subpopulations_; }
    std::span<const Subpopulation> subpopulations() const { return subpopulations_; }

private:
    std::vector<Subpopulation> subpopulations_;
};

} // namespace evokit
