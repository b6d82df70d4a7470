#include "evokit/cli/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "evokit/errors.hpp"
#include "evokit/text.hpp"

namespace evokit::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t end = line.find(',', start);
        cells.push_back(trim(line.substr(start, end == std::string_view::npos ? line.size() - start
                                                                              : end - start)));
        start = end == std::string_view::npos ? line.size() + 1 : end + 1;
    }
    return cells;
}

bool parse_cell(std::string_view cell, double& out) {
    auto result = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return result.ec == std::errc{} && result.ptr == cell.data() + cell.size();
}

} // namespace

RegressionProblem load_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DatasetError("cannot read dataset '" + path.string() + "'");
    }

    std::vector<std::vector<double>> rows;
    std::size_t columns = 0;
    std::string line;
    std::size_t line_no = 0;
    bool first_data_candidate = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        std::vector<std::string_view> cells = split_cells(view);

        if (first_data_candidate) {
            first_data_candidate = false;
            columns = cells.size();
            if (columns < 2) {
                throw DatasetError("dataset '" + path.string() +
                                   "': needs at least 2 columns (features + target)");
            }
            bool header = false;
            for (auto cell : cells) {
                double ignored = 0.0;
                if (!parse_cell(cell, ignored)) {
                    header = true;
                    break;
                }
            }
            if (header) {
                continue;
            }
        }
        if (cells.size() != columns) {
            throw DatasetError("dataset '" + path.string() + "': line " + std::to_string(line_no) +
                               ": expected " + std::to_string(columns) + " cells, got " +
                               std::to_string(cells.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto cell : cells) {
            double value = 0.0;
            if (!parse_cell(cell, value)) {
                throw DatasetError("dataset '" + path.string() + "': line " +
                                   std::to_string(line_no) + ": non-numeric cell '" +
                                   std::string(cell) + "'");
            }
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }

    if (rows.empty()) {
        throw DatasetError("dataset '" + path.string() + "': no data rows");
    }

    Matrix features(rows.size(), columns - 1);
    std::vector<double> targets(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c + 1 < columns; ++c) {
            features.at(r, c) = rows[r][c];
        }
        targets[r] = rows[r][columns - 1];
    }
    return RegressionProblem(std::move(features), std::move(targets));
}

void write_stats_csv(std::span<const GenerationStats> rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write stats file '" + path.string() + "'");
    }
    out << "generation,best,average,worst\n";
    for (const auto& row : rows) {
        out << row.generation << ',' << format_double(row.best) << ',' << format_double(row.average)
            << ',' << format_double(row.worst) << '\n';
    }
    if (!out) {
        throw ConfigError("failed writing stats file '" + path.string() + "'");
    }
}

} // namespace evokit::cli
