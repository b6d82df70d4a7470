#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "evokit/rng.hpp"

namespace evokit::ga {

enum class CellKind { bit, real };

struct Bounds {
    double lo = 0.0;
    double hi = 1.0;

    bool operator==(const Bounds&) const = default;
};

/// Fixed-length vector genome. Bit cells hold 0/1; real cells carry
/// per-cell bounds that every operator clamps back into.
struct VectorGenome {
    CellKind kind = CellKind::bit;
    std::vector<double> cells;
    std::vector<Bounds> bounds; // real kind: one entry per cell

    std::size_t size() const { return cells.size(); }

    bool operator==(const VectorGenome&) const = default;
};

/// Uniform random genome: fair coin per bit cell, uniform in `bounds` per
/// real cell. Throws ConfigError on length < 1 or inverted bounds.
VectorGenome create_random_vector(std::size_t length, CellKind kind, Bounds bounds, Rng& rng);

/// Offspring swap suffixes at `cut` (cells [cut, length) exchanged).
/// Requires 1 <= cut < length.
std::pair<VectorGenome, VectorGenome> one_point_crossover_at(const VectorGenome& a,
                                                             const VectorGenome& b,
                                                             std::size_t cut);

/// Cut point drawn uniformly from [1, length - 1]. Throws Error on
/// length/kind mismatch or length < 2.
std::pair<VectorGenome, VectorGenome> one_point_crossover(const VectorGenome& a,
                                                          const VectorGenome& b,
                                                          Rng& rng);

/// Each cell independently mutated with probability `p`: bits flip, reals
/// get a Gaussian nudge with sigma = 0.1 * (hi - lo), clamped to bounds.
VectorGenome per_cell_mutation(const VectorGenome& genome, double p, Rng& rng);

/// Comma-separated cell values on one line.
std::string format_vector(const VectorGenome& genome);

} // namespace evokit::ga
