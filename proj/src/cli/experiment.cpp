#include "evokit/cli/experiment.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

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

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    auto result = std::from_chars(value.data(), value.data() + value.size(), out);
    if (result.ec != std::errc{} || result.ptr != value.data() + value.size()) {
        throw ConfigError("config: key '" + std::string(key) + "': cannot parse number '" +
                          std::string(value) + "'");
    }
    return out;
}

std::vector<OperatorSpec> parse_operators(std::string_view value) {
    std::vector<OperatorSpec> specs;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t end = value.find(',', start);
        std::string_view entry =
            trim(value.substr(start, end == std::string_view::npos ? value.size() - start
                                                                   : end - start));
        start = end == std::string_view::npos ? value.size() + 1 : end + 1;
        if (entry.empty()) {
            continue;
        }
        std::size_t c1 = entry.find(':');
        std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos
                                                      : entry.find(':', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw ConfigError("config: operators entry '" + std::string(entry) +
                              "' is not name:probability:arity");
        }
        OperatorSpec spec;
        spec.name = std::string(trim(entry.substr(0, c1)));
        spec.probability = parse_number<double>("operators", trim(entry.substr(c1 + 1, c2 - c1 - 1)));
        spec.arity = parse_number<int>("operators", trim(entry.substr(c2 + 1)));
        if (spec.probability < 0.0 || spec.probability > 1.0) {
            throw ConfigError("config: operator '" + spec.name + "': probability outside [0, 1]");
        }
        if (spec.arity < 1) {
            throw ConfigError("config: operator '" + spec.name + "': arity must be at least 1");
        }
        static const std::set<std::string_view> known = {
            "subtree_crossover", "subtree_mutation", "erc_mutation", "one_point_crossover",
            "per_cell_mutation"};
        if (!known.count(spec.name)) {
            throw ConfigError("config: unknown operator '" + spec.name + "'");
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

ProblemSpec parse_problem(std::string_view value) {
    ProblemSpec spec;
    if (value == "builtin_symreg") {
        spec.kind = ProblemSpec::Kind::builtin_symreg;
        return spec;
    }
    constexpr std::string_view prefix = "csv_regression(";
    if (value.starts_with(prefix) && value.ends_with(')')) {
        spec.kind = ProblemSpec::Kind::csv_regression;
        spec.csv_path =
            std::string(trim(value.substr(prefix.size(), value.size() - prefix.size() - 1)));
        if (spec.csv_path.empty()) {
            throw ConfigError("config: csv_regression needs a path");
        }
        return spec;
    }
    throw ConfigError("config: problem must be builtin_symreg or csv_regression(path), got '" +
                      std::string(value) + "'");
}

} // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
    ExperimentConfig config;
    std::set<std::string, std::less<>> seen;
    std::optional<double> termination_optimal;
    std::optional<double> termination_threshold;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos
                                                       ? text.size() - start
                                                       : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config: line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config: line " + std::to_string(line_no) + ": empty key");
        }
        if (!seen.insert(std::string(key)).second) {
            throw ConfigError("config: duplicate key '" + std::string(key) + "'");
        }

        if (key == "problem") {
            config.problem = parse_problem(value);
        } else if (key == "population_size") {
            auto n = parse_number<long long>(key, value);
            if (n < 1) {
                throw ConfigError("config: population_size must be at least 1");
            }
            config.run.population_size = static_cast<std::size_t>(n);
        } else if (key == "init_depth.lo") {
            config.run.init_depth_lo = parse_number<int>(key, value);
        } else if (key == "init_depth.hi") {
            config.run.init_depth_hi = parse_number<int>(key, value);
        } else if (key == "elitism_rate") {
            config.run.elitism_rate = parse_number<double>(key, value);
            if (config.run.elitism_rate < 0.0 || config.run.elitism_rate > 1.0) {
                throw ConfigError("config: elitism_rate outside [0, 1]");
            }
        } else if (key == "bloat_weight") {
            config.run.bloat_weight = parse_number<double>(key, value);
            if (config.run.bloat_weight < 0.0) {
                throw ConfigError("config: bloat_weight must be non-negative");
            }
        } else if (key == "operators") {
            config.run.operators = parse_operators(value);
        } else if (key == "tournament_size") {
            config.run.tournament_size = parse_number<int>(key, value);
            if (config.run.tournament_size < 1) {
                throw ConfigError("config: tournament_size must be at least 1");
            }
        } else if (key == "max_generation") {
            config.run.max_generation = parse_number<int>(key, value);
            if (config.run.max_generation < 1) {
                throw ConfigError("config: max_generation must be at least 1");
            }
        } else if (key == "max_workers") {
            config.run.max_workers = parse_number<int>(key, value);
            if (config.run.max_workers < 1) {
                throw ConfigError("config: max_workers must be at least 1");
            }
        } else if (key == "termination.optimal") {
            termination_optimal = parse_number<double>(key, value);
        } else if (key == "termination.threshold") {
            termination_threshold = parse_number<double>(key, value);
            if (*termination_threshold < 0.0) {
                throw ConfigError("config: termination.threshold must be non-negative");
            }
        } else if (key == "seed") {
            config.run.seed = parse_number<std::uint64_t>(key, value);
        } else {
            throw ConfigError("config: unknown key '" + std::string(key) + "'");
        }
    }

    if (config.run.init_depth_lo < 1 || config.run.init_depth_lo > config.run.init_depth_hi) {
        throw ConfigError("config: init_depth needs 1 <= lo <= hi");
    }
    if (termination_optimal.has_value() != termination_threshold.has_value()) {
        throw ConfigError(
            "config: termination.optimal and termination.threshold must appear together");
    }
    if (termination_optimal) {
        config.run.termination = ThresholdTermination{*termination_optimal, *termination_threshold};
    }
    return config;
}

std::string serialize_experiment_config(const ExperimentConfig& config) {
    std::ostringstream out;
    out << "problem = ";
    if (config.problem.kind == ProblemSpec::Kind::builtin_symreg) {
        out << "builtin_symreg\n";
    } else {
        out << "csv_regression(" << config.problem.csv_path << ")\n";
    }
    out << "population_size = " << config.run.population_size << '\n';
    out << "init_depth.lo = " << config.run.init_depth_lo << '\n';
    out << "init_depth.hi = " << config.run.init_depth_hi << '\n';
    out << "elitism_rate = " << format_double(config.run.elitism_rate) << '\n';
    out << "bloat_weight = " << format_double(config.run.bloat_weight) << '\n';
    out << "operators = ";
    for (std::size_t i = 0; i < config.run.operators.size(); ++i) {
        const OperatorSpec& spec = config.run.operators[i];
        if (i > 0) {
            out << ", ";
        }
        out << spec.name << ':' << format_double(spec.probability) << ':' << spec.arity;
    }
    out << '\n';
    out << "tournament_size = " << config.run.tournament_size << '\n';
    out << "max_generation = " << config.run.max_generation << '\n';
    out << "max_workers = " << config.run.max_workers << '\n';
    if (config.run.termination) {
        out << "termination.optimal = " << format_double(config.run.termination->optimal) << '\n';
        out << "termination.threshold = " << format_double(config.run.termination->threshold)
            << '\n';
    }
    out << "seed = " << config.run.seed << '\n';
    return out.str();
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config(buffer.str());
}

} // namespace evokit::cli
