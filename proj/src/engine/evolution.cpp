#include "evokit/engine/evolution.hpp"

#include <utility>

#include "evokit/errors.hpp"
#include "evokit/eval/evaluator.hpp"
#include "evokit/eval/parallel.hpp"

namespace evokit {

namespace {

void validate_config(const AlgorithmConfig& config) {
    if (config.max_generation < 1) {
        throw ConfigError("max_generation must be at least 1");
    }
    if (config.max_workers < 1) {
        throw ConfigError("max_workers must be at least 1");
    }
    if (!config.breeder) {
        throw ConfigError("algorithm needs a breeder");
    }
    bool direction = config.population.subpopulation(0).higher_is_better;
    for (const auto& subpopulation : config.population.subpopulations()) {
        if (subpopulation.population_size < 1) {
            throw ConfigError("subpopulation population_size must be at least 1");
        }
        if (!subpopulation.creator) {
            throw ConfigError("subpopulation has no creator");
        }
        if (!subpopulation.evaluator) {
            throw ConfigError("subpopulation has no evaluator");
        }
        if (subpopulation.elitism_rate < 0.0 || subpopulation.elitism_rate > 1.0) {
            throw ConfigError("elitism_rate outside [0, 1]");
        }
        if (subpopulation.selection.tournament_size < 1) {
            throw ConfigError("tournament_size must be at least 1");
        }
        if (subpopulation.higher_is_better != direction) {
            throw ConfigError("subpopulations must share one optimization direction");
        }
    }
}

} // namespace

Evolution::Evolution(AlgorithmConfig config) : config_(std::move(config)) {
    validate_config(config_);
    rng_.seed(config_.seed);
    history_.resize(config_.population.subpopulation_count());
    for (const auto& observer : config_.statistics) {
        if (observer) {
            observer->attach(bus_);
        }
    }
}

void Evolution::initialize_population() {
    for (auto& subpopulation : config_.population.subpopulations()) {
        subpopulation.individuals.clear();
        subpopulation.individuals.reserve(subpopulation.population_size);
        for (std::size_t i = 0; i < subpopulation.population_size; ++i) {
            subpopulation.individuals.emplace_back(subpopulation.creator(rng_), ids_.allocate(),
                                                   subpopulation.higher_is_better);
        }
        std::size_t kind = subpopulation.individuals.front().genome().index();
        for (const auto& individual : subpopulation.individuals) {
            if (individual.genome().index() != kind) {
                throw Error("subpopulation mixes genome kinds");
            }
        }
    }
}

void Evolution::update_best() {
    for (const auto& subpopulation : config_.population.subpopulations()) {
        for (const auto& individual : subpopulation.individuals) {
            if (!best_ || better_than(individual.fitness(), best_->fitness())) {
                best_ = individual.clone(ids_);
            }
        }
    }
}

void Evolution::evaluate_and_track() {
    evaluate_population(config_.population, config_.max_workers, &bus_);
    update_best();
}

const Individual& Evolution::evolve() {
    if (evolved_) {
        throw Error("evolve: this run has already executed");
    }
    evolved_ = true;

    initialize_population();

    Event started;
    started.population = &config_.population;
    bus_.publish(events::evolution_started, started);

    evaluate_and_track();

    for (int generation = 1; generation <= config_.max_generation; ++generation) {
        Event gen_event;
        gen_event.generation = generation;
        gen_event.population = &config_.population;
        bus_.publish(events::generation_started, gen_event);

        for (auto& subpopulation : config_.population.subpopulations()) {
            std::vector<Individual> next =
                config_.breeder->breed_next_generation(subpopulation, rng_, ids_);
            if (next.size() != subpopulation.population_size) {
                throw Error("breeder produced a generation of the wrong size");
            }
            subpopulation.individuals = std::move(next);
        }

        evaluate_and_track();

        std::vector<GenerationStats> stats_rows;
        stats_rows.reserve(config_.population.subpopulation_count());
        for (std::size_t s = 0; s < config_.population.subpopulation_count(); ++s) {
            GenerationStats row =
                record_generation_stats(config_.population.subpopulation(s), generation);
            stats_rows.push_back(row);
            history_[s].push_back(row);
        }
        generations_ = generation;

        Event ended;
        ended.generation = generation;
        ended.population = &config_.population;
        ended.stats = &stats_rows;
        bus_.publish(events::generation_ended, ended);

        if (config_.termination_checker && config_.termination_checker(*best_, generation)) {
            terminated_early_ = true;
            break;
        }
    }

    Event finished;
    finished.generation = generations_;
    finished.population = &config_.population;
    bus_.publish(events::evolution_ended, finished);

    return *best_;
}

const Individual& Evolution::best() const {
    if (!best_) {
        throw Error("best: run evolve first");
    }
    return *best_;
}

double Evolution::execute_best(const std::map<std::string, double>& bindings) const {
    if (!evolved_) {
        throw Error("execute_best: run evolve first");
    }
    return tree_genome(best()).execute(bindings);
}

const std::vector<GenerationStats>& Evolution::stats_history(std::size_t subpopulation) const {
    return history_.at(subpopulation);
}

} // namespace evokit
