#include "evokit/cli/runner.hpp"

#include <fstream>
#include <memory>
#include <utility>

#include "evokit/cli/csv.hpp"
#include "evokit/cli/experiment.hpp"
#include "evokit/errors.hpp"
#include "evokit/symreg.hpp"
#include "evokit/text.hpp"

namespace evokit::cli {

namespace {

RegressionProblem resolve_problem(const ExperimentConfig& config,
                                  const std::filesystem::path& config_path) {
    if (config.problem.kind == ProblemSpec::Kind::builtin_symreg) {
        return builtin_symreg_problem();
    }
    std::filesystem::path csv(config.problem.csv_path);
    if (csv.is_relative()) {
        csv = config_path.parent_path() / csv;
    }
    return load_dataset_csv(csv);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw ConfigError("failed writing '" + path.string() + "'");
    }
}

} // namespace

int run_experiment(const std::filesystem::path& config_path, const RunOverrides& overrides,
                   std::ostream& out, std::ostream& err) {
    try {
        ExperimentConfig config = load_experiment_config(config_path);
        if (overrides.seed) {
            config.run.seed = *overrides.seed;
        }
        if (overrides.max_generation) {
            if (*overrides.max_generation < 1) {
                throw ConfigError("--max-generation must be at least 1");
            }
            config.run.max_generation = *overrides.max_generation;
        }
        std::filesystem::path out_dir = overrides.out_dir.value_or(".");

        RegressionProblem problem = resolve_problem(config, config_path);
        std::shared_ptr<const gp::TerminalSet> terminals;
        if (config.problem.kind == ProblemSpec::Kind::builtin_symreg) {
            terminals = std::make_shared<const gp::TerminalSet>(gp::default_terminal_set());
        }

        AlgorithmConfig algorithm =
            build_symreg_algorithm(config.run, std::move(problem), nullptr, terminals);
        auto stats = std::make_shared<BestAverageWorstStatistics>();
        algorithm.statistics.push_back(stats);

        Evolution run(std::move(algorithm));
        const Individual& best = run.evolve();

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        write_stats_csv(stats->rows(0), out_dir / "stats.csv");
        write_text_file(out_dir / "best_tree.txt", gp::format_tree(tree_genome(best)));
        write_text_file(out_dir / "summary.txt",
                        "best_fitness=" + format_double(best.fitness().value) +
                            "\ngenerations=" + std::to_string(run.generations_run()) + "\n");

        out << "best fitness: " << format_double(best.fitness().value) << " ("
            << run.generations_run() << " generations)\n";
        return 0;
    } catch (const ConfigError& error) {
        err << "error: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        err << "internal error: " << error.what() << '\n';
        return 2;
    }
}

} // namespace evokit::cli
