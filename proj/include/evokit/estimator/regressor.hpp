#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evokit/eval/regression.hpp"
#include "evokit/individual.hpp"
#include "evokit/symreg.hpp"

namespace evokit {

/// Fit/predict facade: fit runs one evolutionary regression over (X, y)
/// and keeps the best individual; predict executes its tree row by row.
/// Refitting replaces the previous model entirely.
class EvolutionRegressor {
public:
    explicit EvolutionRegressor(SymRegConfig params = {});

    EvolutionRegressor& fit(const Matrix& X, const std::vector<double>& y);

    /// Throws Error before fit or when X's column count differs from the
    /// fitted feature count.
    std::vector<double> predict(const Matrix& X) const;

    bool is_fitted() const { return best_.has_value(); }
    const Individual& fitted_best() const;
    std::size_t feature_count() const;

    const SymRegConfig& params() const { return params_; }
    SymRegConfig& params() { return params_; }

private:
    SymRegConfig params_;
    std::optional<Individual> best_;
    std::size_t feature_count_ = 0;
};

} // namespace evokit
