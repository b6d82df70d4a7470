#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace evokit {

/// All randomness in a run flows through a single generator of this type,
/// seeded once from the run configuration. Evaluation never touches it.
using Rng = std::mt19937_64;

/// Uniform index in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// True with probability p. Degenerate probabilities consume no draw.
inline bool chance(Rng& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline double gaussian(Rng& rng, double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(rng);
}

} // namespace evokit
