#pragma once

#include <cstddef>

#include "evokit/event_bus.hpp"
#include "evokit/population.hpp"

namespace evokit {

/// Evaluates every stale individual exactly once, fanning the work out to
/// at most `max_workers` threads. Evaluators are pure and individuals are
/// disjoint, so the resulting fitness assignment is identical for every
/// worker count. Publishes one fitness_evaluated event per fresh
/// evaluation, in individual-id order, from the calling thread. Returns
/// the number of fresh evaluations.
std::size_t evaluate_population(Population& population, int max_workers, EventBus* bus = nullptr);

} // namespace evokit
