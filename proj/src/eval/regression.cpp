#include "evokit/eval/regression.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "evokit/errors.hpp"

namespace evokit {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m;
    if (rows.empty()) {
        return m;
    }
    m.rows_ = rows.size();
    m.cols_ = rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw DatasetError("Matrix::from_rows: row " + std::to_string(r) + " has " +
                               std::to_string(rows[r].size()) + " cells, expected " +
                               std::to_string(m.cols_));
        }
        m.data_.insert(m.data_.end(), rows[r].begin(), rows[r].end());
    }
    return m;
}

RegressionProblem::RegressionProblem(Matrix features_in, std::vector<double> targets_in)
    : features(std::move(features_in)), targets(std::move(targets_in)) {
    if (features.rows() == 0) {
        throw DatasetError("RegressionProblem: needs at least one sample");
    }
    if (features.rows() != targets.size()) {
        throw DatasetError("RegressionProblem: " + std::to_string(features.rows()) +
                           " feature rows vs " + std::to_string(targets.size()) + " targets");
    }
}

double symreg_error(const gp::TreeGenome& genome, const RegressionProblem& problem) {
    double total = 0.0;
    for (std::size_t r = 0; r < problem.sample_count(); ++r) {
        double predicted = genome.execute(problem.features.row(r));
        total += std::fabs(predicted - problem.targets[r]);
    }
    return total / static_cast<double>(problem.sample_count());
}

double apply_bloat_penalty(double error, std::size_t tree_size, const BloatConfig& config,
                           bool higher_is_better) {
    if (config.bloat_weight < 0.0) {
        throw ConfigError("bloat_weight must be non-negative");
    }
    double term = config.bloat_weight * static_cast<double>(tree_size);
    return higher_is_better ? error - term : error + term;
}

double apply_bloat_penalty(double error, const gp::TreeGenome& genome, const BloatConfig& config,
                           bool higher_is_better) {
    return apply_bloat_penalty(error, genome.size(), config, higher_is_better);
}

} // namespace evokit
