#include "evokit/ga/vector.hpp"

#include <algorithm>

#include "evokit/errors.hpp"
#include "evokit/text.hpp"

namespace evokit::ga {

namespace {

void require_compatible(const VectorGenome& a, const VectorGenome& b) {
    if (a.size() != b.size()) {
        throw Error("one_point_crossover: genome length mismatch");
    }
    if (a.kind != b.kind) {
        throw Error("one_point_crossover: genome kind mismatch");
    }
}

} // namespace

VectorGenome create_random_vector(std::size_t length, CellKind kind, Bounds bounds, Rng& rng) {
    if (length < 1) {
        throw ConfigError("create_random_vector: length must be at least 1");
    }
    if (kind == CellKind::real && bounds.lo > bounds.hi) {
        throw ConfigError("create_random_vector: bounds lo > hi");
    }
    VectorGenome genome;
    genome.kind = kind;
    genome.cells.reserve(length);
    if (kind == CellKind::bit) {
        for (std::size_t i = 0; i < length; ++i) {
            genome.cells.push_back(static_cast<double>(uniform_index(rng, 2)));
        }
    } else {
        genome.bounds.assign(length, bounds);
        for (std::size_t i = 0; i < length; ++i) {
            genome.cells.push_back(bounds.lo == bounds.hi ? bounds.lo
                                                          : uniform_real(rng, bounds.lo, bounds.hi));
        }
    }
    return genome;
}

std::pair<VectorGenome, VectorGenome> one_point_crossover_at(const VectorGenome& a,
                                                             const VectorGenome& b,
                                                             std::size_t cut) {
    require_compatible(a, b);
    if (cut < 1 || cut >= a.size()) {
        throw Error("one_point_crossover: cut point out of range");
    }
    VectorGenome child_a = a;
    VectorGenome child_b = b;
    for (std::size_t i = cut; i < a.size(); ++i) {
        std::swap(child_a.cells[i], child_b.cells[i]);
        if (a.kind == CellKind::real) {
            std::swap(child_a.bounds[i], child_b.bounds[i]);
        }
    }
    return {std::move(child_a), std::move(child_b)};
}

std::pair<VectorGenome, VectorGenome> one_point_crossover(const VectorGenome& a,
                                                          const VectorGenome& b,
                                                          Rng& rng) {
    require_compatible(a, b);
    if (a.size() < 2) {
        throw Error("one_point_crossover: genomes must have at least 2 cells");
    }
    std::size_t cut = 1 + uniform_index(rng, a.size() - 1);
    return one_point_crossover_at(a, b, cut);
}

VectorGenome per_cell_mutation(const VectorGenome& genome, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) {
        throw ConfigError("per_cell_mutation: probability outside [0, 1]");
    }
    VectorGenome result = genome;
    for (std::size_t i = 0; i < result.size(); ++i) {
        if (!chance(rng, p)) {
            continue;
        }
        if (result.kind == CellKind::bit) {
            result.cells[i] = result.cells[i] == 0.0 ? 1.0 : 0.0;
        } else {
            const Bounds& bounds = result.bounds[i];
            double sigma = 0.1 * (bounds.hi - bounds.lo);
            double moved = result.cells[i] + (sigma > 0.0 ? gaussian(rng, 0.0, sigma) : 0.0);
            result.cells[i] = std::clamp(moved, bounds.lo, bounds.hi);
        }
    }
    return result;
}

std::string format_vector(const VectorGenome& genome) {
    std::string out;
    for (std::size_t i = 0; i < genome.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += format_double(genome.cells[i]);
    }
    return out;
}

} // namespace evokit::ga
