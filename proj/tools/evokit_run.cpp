#include <cstdint>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "evokit/cli/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"evokit experiment runner: evolves a symbolic regressor from a config file"};

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_generation;
    std::optional<std::string> out_dir;

    app.add_option("--config", config_path, "experiment config file")->required();
    app.add_option("--seed", seed, "override the config seed");
    app.add_option("--max-generation", max_generation, "override the generation cap");
    app.add_option("--out", out_dir, "directory for stats.csv, best_tree.txt, summary.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 1;
    }

    evokit::cli::RunOverrides overrides;
    overrides.seed = seed;
    overrides.max_generation = max_generation;
    if (out_dir) {
        overrides.out_dir = *out_dir;
    }
    return evokit::cli::run_experiment(config_path, overrides);
}
