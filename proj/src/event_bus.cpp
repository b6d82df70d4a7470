#include "evokit/event_bus.hpp"

#include "evokit/errors.hpp"

namespace evokit {

EventBus::Subscription EventBus::subscribe(std::string_view event, Handler handler) {
    if (!handler) {
        throw Error("subscribe: empty handler");
    }
    auto& handlers = subscribers_[std::string(event)];
    handlers.push_back(std::move(handler));
    return Subscription{std::string(event), handlers.size() - 1};
}

void EventBus::unsubscribe(const Subscription& subscription) {
    auto it = subscribers_.find(subscription.event);
    if (it == subscribers_.end() || subscription.slot >= it->second.size()) {
        return;
    }
    it->second[subscription.slot] = nullptr;
}

std::size_t EventBus::publish(std::string_view event, const Event& payload) const {
    auto it = subscribers_.find(event);
    if (it == subscribers_.end()) {
        return 0;
    }
    std::size_t invoked = 0;
    for (const auto& handler : it->second) {
        if (!handler) {
            continue;
        }
        handler(payload);
        ++invoked;
    }
    return invoked;
}

std::size_t EventBus::subscriber_count(std::string_view event) const {
    auto it = subscribers_.find(event);
    if (it == subscribers_.end()) {
        return 0;
    }
    std::size_t live = 0;
    for (const auto& handler : it->second) {
        live += handler ? 1 : 0;
    }
    return live;
}

} // namespace evokit
