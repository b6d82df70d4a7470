#include "evokit/estimator/regressor.hpp"

#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

EvolutionRegressor::EvolutionRegressor(SymRegConfig params) : params_(std::move(params)) {}

EvolutionRegressor& EvolutionRegressor::fit(const Matrix& X, const std::vector<double>& y) {
    if (X.rows() == 0 || X.cols() == 0) {
        throw ConfigError("fit: empty feature matrix");
    }
    if (X.rows() != y.size()) {
        throw ConfigError("fit: " + std::to_string(X.rows()) + " feature rows vs " +
                          std::to_string(y.size()) + " targets");
    }

    best_.reset();
    feature_count_ = 0;

    RegressionProblem problem(X, y);
    Evolution run(build_symreg_algorithm(params_, std::move(problem)));
    best_ = run.evolve();
    feature_count_ = X.cols();
    return *this;
}

std::vector<double> EvolutionRegressor::predict(const Matrix& X) const {
    if (!best_) {
        throw Error("predict: estimator is not fitted");
    }
    if (X.cols() != feature_count_) {
        throw Error("predict: expected " + std::to_string(feature_count_) + " feature columns, got " +
                    std::to_string(X.cols()));
    }
    const gp::TreeGenome& tree = tree_genome(*best_);
    std::vector<double> predictions;
    predictions.reserve(X.rows());
    for (std::size_t r = 0; r < X.rows(); ++r) {
        predictions.push_back(tree.execute(X.row(r)));
    }
    return predictions;
}

const Individual& EvolutionRegressor::fitted_best() const {
    if (!best_) {
        throw Error("fitted_best: estimator is not fitted");
    }
    return *best_;
}

std::size_t EvolutionRegressor::feature_count() const {
    if (!best_) {
        throw Error("feature_count: estimator is not fitted");
    }
    return feature_count_;
}

} // namespace evokit
