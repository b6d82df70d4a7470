#include "evokit/engine/statistics.hpp"

#include <ostream>

#include "evokit/errors.hpp"
#include "evokit/text.hpp"

namespace evokit {

GenerationStats record_generation_stats(const Subpopulation& subpopulation, int generation) {
    if (subpopulation.individuals.empty()) {
        throw Error("record_generation_stats: empty subpopulation");
    }
    GenerationStats stats;
    stats.generation = generation;
    double total = 0.0;
    bool first = true;
    for (const auto& individual : subpopulation.individuals) {
        const Fitness& fitness = individual.fitness();
        if (!fitness.is_evaluated) {
            throw Error("record_generation_stats: unevaluated individual");
        }
        double value = fitness.selection_value();
        total += value;
        if (first) {
            stats.best = stats.worst = value;
            first = false;
            continue;
        }
        bool improves = subpopulation.higher_is_better ? value > stats.best : value < stats.best;
        bool worsens = subpopulation.higher_is_better ? value < stats.worst : value > stats.worst;
        if (improves) {
            stats.best = value;
        }
        if (worsens) {
            stats.worst = value;
        }
    }
    stats.average = total / static_cast<double>(subpopulation.individuals.size());
    return stats;
}

void BestAverageWorstStatistics::attach(EventBus& bus) {
    bus.subscribe(events::generation_ended, [this](const Event& event) {
        if (!event.stats) {
            return;
        }
        if (rows_.size() < event.stats->size()) {
            rows_.resize(event.stats->size());
        }
        for (std::size_t s = 0; s < event.stats->size(); ++s) {
            const GenerationStats& row = (*event.stats)[s];
            rows_[s].push_back(row);
            if (echo_) {
                (*echo_) << "generation " << row.generation << " subpopulation " << s
                         << ": best=" << format_double(row.best)
                         << " average=" << format_double(row.average)
                         << " worst=" << format_double(row.worst) << '\n';
            }
        }
    });
}

const std::vector<GenerationStats>& BestAverageWorstStatistics::rows(std::size_t subpopulation) const {
    return rows_.at(subpopulation);
}

} // namespace evokit
