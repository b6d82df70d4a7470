#include "evokit/variation/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "evokit/errors.hpp"

namespace evokit {

namespace {

void require_evaluated(const Subpopulation& subpopulation, const char* who) {
    for (const auto& individual : subpopulation.individuals) {
        if (!individual.fitness().is_evaluated) {
            throw Error(std::string(who) + ": subpopulation has unevaluated individuals");
        }
    }
}

bool prefer(const Individual& a, const Individual& b) {
    if (better_than(a.fitness(), b.fitness())) {
        return true;
    }
    if (better_than(b.fitness(), a.fitness())) {
        return false;
    }
    return a.id() < b.id();
}

} // namespace

std::size_t elite_count(double elitism_rate, std::size_t population_size) {
    if (elitism_rate < 0.0 || elitism_rate > 1.0) {
        throw ConfigError("elitism_rate outside [0, 1]");
    }
    double scaled = elitism_rate * static_cast<double>(population_size);
    double nearest = std::round(scaled);
    double count = std::abs(scaled - nearest) < 1e-9 ? nearest : std::ceil(scaled);
    return static_cast<std::size_t>(count);
}

std::size_t tournament_winner(const Subpopulation& subpopulation,
                              std::span<const std::size_t> contestants) {
    if (contestants.empty()) {
        throw Error("tournament_winner: no contestants");
    }
    std::size_t best = contestants[0];
    for (std::size_t i = 1; i < contestants.size(); ++i) {
        if (prefer(subpopulation.individuals[contestants[i]], subpopulation.individuals[best])) {
            best = contestants[i];
        }
    }
    return best;
}

std::vector<Individual> tournament_select(const Subpopulation& subpopulation, int tournament_size,
                                          std::size_t count, Rng& rng, IdAllocator& ids) {
    if (tournament_size < 1) {
        throw ConfigError("tournament_select: tournament size must be at least 1");
    }
    if (subpopulation.individuals.empty()) {
        throw Error("tournament_select: empty subpopulation");
    }
    require_evaluated(subpopulation, "tournament_select");

    std::vector<Individual> selected;
    selected.reserve(count);
    std::vector<std::size_t> contestants(static_cast<std::size_t>(tournament_size));
    for (std::size_t n = 0; n < count; ++n) {
        for (auto& slot : contestants) {
            slot = uniform_index(rng, subpopulation.individuals.size());
        }
        std::size_t winner = tournament_winner(subpopulation, contestants);
        selected.push_back(subpopulation.individuals[winner].clone(ids));
    }
    return selected;
}

std::vector<Individual> apply_elitism(const Subpopulation& subpopulation, IdAllocator& ids) {
    std::size_t count = elite_count(subpopulation.elitism_rate, subpopulation.individuals.size());
    if (count == 0) {
        return {};
    }
    require_evaluated(subpopulation, "apply_elitism");

    std::vector<std::size_t> order(subpopulation.individuals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return prefer(subpopulation.individuals[lhs], subpopulation.individuals[rhs]);
    });

    std::vector<Individual> elites;
    elites.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        elites.push_back(subpopulation.individuals[order[i]].clone(ids));
    }
    return elites;
}

} // namespace evokit
