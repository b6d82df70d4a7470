#pragma once

#include <iosfwd>
#include <vector>

#include "evokit/event_bus.hpp"
#include "evokit/population.hpp"

namespace evokit {

/// Best/average/worst selection values of one subpopulation at one
/// generation boundary.
struct GenerationStats {
    int generation = 0;
    double best = 0.0;
    double average = 0.0;
    double worst = 0.0;
};

/// Summarizes the current (fully evaluated) individuals of a
/// subpopulation.
GenerationStats record_generation_stats(const Subpopulation& subpopulation, int generation);

/// Anything that watches a run through event hooks.
class StatisticsObserver {
public:
    virtual ~StatisticsObserver() = default;
    virtual void attach(EventBus& bus) = 0;
};

/// Collects the per-generation stats rows carried by generation_ended
/// events, per subpopulation, optionally echoing one line per generation.
class BestAverageWorstStatistics final : public StatisticsObserver {
public:
    explicit BestAverageWorstStatistics(std::ostream* echo = nullptr) : echo_(echo) {}

    void attach(EventBus& bus) override;

    std::size_t subpopulation_count() const { return rows_.size(); }
    const std::vector<GenerationStats>& rows(std::size_t subpopulation = 0) const;

private:
    std::ostream* echo_;
    std::vector<std::vector<GenerationStats>> rows_;
};

} // namespace evokit
