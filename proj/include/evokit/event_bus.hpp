#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace evokit {

class Population;
class Individual;
struct GenerationStats;

/// Canonical event names published by the engine.
namespace events {
inline constexpr std::string_view evolution_started = "evolution_started";
inline constexpr std::string_view generation_started = "generation_started";
inline constexpr std::string_view fitness_evaluated = "fitness_evaluated";
inline constexpr std::string_view generation_ended = "generation_ended";
inline constexpr std::string_view evolution_ended = "evolution_ended";
} // namespace events

/// Read-only view handed to subscribers. Which members are set depends on
/// the event; unset ones are null/zero.
struct Event {
    int generation = 0;
    const Population* population = nullptr;
    const Individual* individual = nullptr;
    const std::vector<GenerationStats>* stats = nullptr;
};

/// Synchronous publish/subscribe hub. Subscribers run on the publishing
/// thread, in registration order. A subscriber that throws aborts the
/// publish and the exception propagates to the publisher.
class EventBus {
public:
    using Handler = std::function<void(const Event&)>;

    struct Subscription {
        std::string event;
        std::size_t slot = 0;
    };

    Subscription subscribe(std::string_view event, Handler handler);

    /// Clears the handler slot; remaining subscribers keep their order.
    void unsubscribe(const Subscription& subscription);

    /// Invokes every live subscriber of `event`. Returns how many ran.
    std::size_t publish(std::string_view event, const Event& payload) const;

    std::size_t subscriber_count(std::string_view event) const;

private:
    std::map<std::string, std::vector<Handler>, std::less<>> subscribers_;
};

} // namespace evokit
