#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evokit/gp/tree.hpp"

namespace evokit {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    /// Throws DatasetError on ragged input.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
    double at(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

    std::span<const double> row(std::size_t index) const {
        return std::span<const double>(data_.data() + index * cols_, cols_);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Supervised regression dataset: one target per feature row.
struct RegressionProblem {
    RegressionProblem(Matrix features, std::vector<double> targets);

    std::size_t sample_count() const { return features.rows(); }
    std::size_t feature_count() const { return features.cols(); }

    Matrix features;
    std::vector<double> targets;
};

/// Per-node fitness pressure against tree growth.
struct BloatConfig {
    double bloat_weight = 0.0;
};

/// Mean absolute error of the tree's predictions over the problem rows,
/// with features bound positionally to variables x0..x{n-1} (or whatever
/// the tree's terminal set declares, in order).
double symreg_error(const gp::TreeGenome& genome, const RegressionProblem& problem);

/// error + bloat_weight * tree_size when minimizing; error - the same term
/// when maximizing.
double apply_bloat_penalty(double error, std::size_t tree_size, const BloatConfig& config,
                           bool higher_is_better = false);
double apply_bloat_penalty(double error, const gp::TreeGenome& genome, const BloatConfig& config,
                           bool higher_is_better = false);

} // namespace evokit
