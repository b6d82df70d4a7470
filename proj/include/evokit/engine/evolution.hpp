#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evokit/engine/breeder.hpp"
#include "evokit/engine/statistics.hpp"
#include "evokit/engine/termination.hpp"
#include "evokit/event_bus.hpp"
#include "evokit/population.hpp"

namespace evokit {

/// Everything one evolutionary run needs.
struct AlgorithmConfig {
    Population population;
    std::shared_ptr<const Breeder> breeder = std::make_shared<SimpleBreeder>();
    int max_generation = 500;
    TerminationChecker termination_checker; // empty: run to max_generation
    int max_workers = 1;
    std::vector<std::shared_ptr<StatisticsObserver>> statistics;
    std::uint64_t seed = 0;
};

/// The generational evolution loop. Creates and evaluates the initial
/// population, then repeats breed / evaluate / record stats / publish
/// events until the termination checker fires or max_generation is
/// reached. All randomness comes from one seeded generator consumed in a
/// fixed order, so a (config, seed) pair fully determines the run.
class Evolution {
public:
    explicit Evolution(AlgorithmConfig config);

    /// Runs the loop once; returns the all-time best individual. Best and
    /// elitism comparisons use penalty-adjusted values; the termination
    /// checker sees the raw objective.
    const Individual& evolve();

    const Individual& best() const;

    /// Executes the best individual's tree genome with named bindings.
    double execute_best(const std::map<std::string, double>& bindings) const;

    int generations_run() const { return generations_; }
    bool terminated_early() const { return terminated_early_; }

    const std::vector<GenerationStats>& stats_history(std::size_t subpopulation = 0) const;

    /// Subscribe before calling evolve to observe the run.
    EventBus& events() { return bus_; }

    const Population& population() const { return config_.population; }

private:
    void initialize_population();
    void evaluate_and_track();
    void update_best();

    AlgorithmConfig config_;
    EventBus bus_;
    Rng rng_;
    IdAllocator ids_;
    std::vector<std::vector<GenerationStats>> history_;
    std::optional<Individual> best_;
    int generations_ = 0;
    bool terminated_early_ = false;
    bool evolved_ = false;
};

} // namespace evokit
