#include "evokit/eval/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "evokit/errors.hpp"
#include "evokit/eval/evaluator.hpp"

namespace evokit {

std::size_t evaluate_population(Population& population, int max_workers, EventBus* bus) {
    if (max_workers < 1) {
        throw ConfigError("evaluate_population: max_workers must be at least 1");
    }

    struct Item {
        Individual* individual;
        const IndividualEvaluator* evaluator;
    };
    std::vector<Item> work;
    for (auto& subpopulation : population.subpopulations()) {
        if (!subpopulation.evaluator) {
            throw ConfigError("evaluate_population: subpopulation has no evaluator");
        }
        for (auto& individual : subpopulation.individuals) {
            if (!individual.fitness().is_evaluated) {
                work.push_back({&individual, subpopulation.evaluator.get()});
            }
        }
    }

    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(max_workers), work.size());
    if (workers <= 1) {
        for (auto& item : work) {
            evaluate_individual(*item.evaluator, *item.individual);
        }
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        std::mutex error_mutex;
        std::exception_ptr first_error;
        std::size_t chunk = (work.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(begin + chunk, work.size());
            if (begin >= end) {
                break;
            }
            threads.emplace_back([&work, &error_mutex, &first_error, begin, end] {
                try {
                    for (std::size_t i = begin; i < end; ++i) {
                        evaluate_individual(*work[i].evaluator, *work[i].individual);
                    }
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
            });
        }
        for (auto& thread : threads) {
            thread.join();
        }
        if (first_error) {
            std::rethrow_exception(first_error);
        }
    }

    if (bus) {
        std::sort(work.begin(), work.end(), [](const Item& a, const Item& b) {
            return a.individual->id() < b.individual->id();
        });
        for (const auto& item : work) {
            Event payload;
            payload.individual = item.individual;
            payload.population = &population;
            bus->publish(events::fitness_evaluated, payload);
        }
    }
    return work.size();
}

} // namespace evokit
