#include "evokit/variation/operators.hpp"

#include <utility>

#include "evokit/errors.hpp"
#include "evokit/gp/creators.hpp"

namespace evokit {

namespace {

using gp::TreeGenome;
using gp::TreeNode;

std::vector<TreeNode> splice(const std::vector<TreeNode>& host, std::size_t at, std::size_t removed,
                             const TreeNode* graft, std::size_t graft_size) {
    std::vector<TreeNode> out;
    out.reserve(host.size() - removed + graft_size);
    out.insert(out.end(), host.begin(), host.begin() + static_cast<std::ptrdiff_t>(at));
    out.insert(out.end(), graft, graft + graft_size);
    out.insert(out.end(), host.begin() + static_cast<std::ptrdiff_t>(at + removed), host.end());
    return out;
}

void require_same_sets(const TreeGenome& a, const TreeGenome& b) {
    if (a.functions_ptr() != b.functions_ptr() || a.terminals_ptr() != b.terminals_ptr()) {
        throw Error("subtree_crossover: parents use different primitive sets");
    }
}

} // namespace

void subtree_crossover(Individual& a, Individual& b, Rng& rng) {
    const TreeGenome& parent_a = tree_genome(std::as_const(a));
    const TreeGenome& parent_b = tree_genome(std::as_const(b));
    require_same_sets(parent_a, parent_b);

    std::size_t point_a = uniform_index(rng, parent_a.size());
    std::size_t point_b = uniform_index(rng, parent_b.size());
    std::size_t span_a = parent_a.subtree_size(point_a);
    std::size_t span_b = parent_b.subtree_size(point_b);

    TreeGenome child_a(splice(parent_a.nodes(), point_a, span_a,
                              parent_b.nodes().data() + point_b, span_b),
                       parent_a.functions_ptr(), parent_a.terminals_ptr());
    TreeGenome child_b(splice(parent_b.nodes(), point_b, span_b,
                              parent_a.nodes().data() + point_a, span_a),
                       parent_b.functions_ptr(), parent_b.terminals_ptr());

    // an over-deep offspring is dropped; that parent survives unchanged
    if (child_a.depth() <= max_tree_depth) {
        tree_genome(a) = std::move(child_a);
    }
    if (child_b.depth() <= max_tree_depth) {
        tree_genome(b) = std::move(child_b);
    }
}

void subtree_mutation(Individual& individual, Rng& rng) {
    const TreeGenome& parent = tree_genome(std::as_const(individual));
    std::size_t point = uniform_index(rng, parent.size());
    std::size_t span = parent.subtree_size(point);

    TreeGenome graft = gp::create_grow(mutation_subtree_depth, parent.functions_ptr(),
                                       parent.terminals_ptr(), rng);
    TreeGenome child(splice(parent.nodes(), point, span, graft.nodes().data(), graft.size()),
                     parent.functions_ptr(), parent.terminals_ptr());
    if (child.depth() <= max_tree_depth) {
        tree_genome(individual) = std::move(child);
    }
}

void erc_mutation(Individual& individual, Rng& rng) {
    const TreeGenome& tree = tree_genome(std::as_const(individual));
    std::vector<std::size_t> constants;
    for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
        if (tree.nodes()[i].kind == TreeNode::Kind::constant) {
            constants.push_back(i);
        }
    }
    if (constants.empty()) {
        return;
    }
    std::size_t pick = constants[uniform_index(rng, constants.size())];
    double fresh = uniform_real(rng, gp::erc_low, gp::erc_high);
    tree_genome(individual).nodes()[pick].value = fresh;
}

void vector_one_point_crossover(Individual& a, Individual& b, Rng& rng) {
    auto [child_a, child_b] = ga::one_point_crossover(vector_genome(std::as_const(a)),
                                                      vector_genome(std::as_const(b)), rng);
    vector_genome(a) = std::move(child_a);
    vector_genome(b) = std::move(child_b);
}

void vector_per_cell_mutation(Individual& individual, double cell_probability, Rng& rng) {
    auto mutated = ga::per_cell_mutation(vector_genome(std::as_const(individual)),
                                         cell_probability, rng);
    vector_genome(individual) = std::move(mutated);
}

OperatorConfig make_operator(std::string_view name, double probability, int arity) {
    if (probability < 0.0 || probability > 1.0) {
        throw ConfigError("operator '" + std::string(name) + "': probability outside [0, 1]");
    }
    auto check_arity = [&](int natural) {
        if (arity != natural) {
            throw ConfigError("operator '" + std::string(name) + "' has arity " +
                              std::to_string(natural) + ", config says " + std::to_string(arity));
        }
    };
    OperatorConfig config{std::string(name), probability, arity, {}};
    if (name == "subtree_crossover") {
        check_arity(2);
        config.apply = [](std::span<Individual> group, Rng& rng) {
            subtree_crossover(group[0], group[1], rng);
        };
    } else if (name == "subtree_mutation") {
        check_arity(1);
        config.apply = [](std::span<Individual> group, Rng& rng) {
            subtree_mutation(group[0], rng);
        };
    } else if (name == "erc_mutation") {
        check_arity(1);
        config.apply = [](std::span<Individual> group, Rng& rng) { erc_mutation(group[0], rng); };
    } else if (name == "one_point_crossover") {
        check_arity(2);
        config.apply = [](std::span<Individual> group, Rng& rng) {
            vector_one_point_crossover(group[0], group[1], rng);
        };
    } else if (name == "per_cell_mutation") {
        check_arity(1);
        config.apply = [](std::span<Individual> group, Rng& rng) {
            // classic default: one expected flip per genome
            std::size_t length = vector_genome(std::as_const(group[0])).size();
            vector_per_cell_mutation(group[0], length > 0 ? 1.0 / static_cast<double>(length) : 0.0,
                                     rng);
        };
    } else {
        throw ConfigError("unknown operator '" + std::string(name) + "'");
    }
    return config;
}

std::vector<Individual> apply_operator_sequence(std::vector<Individual> pool,
                                                std::span<const OperatorConfig> sequence,
                                                Rng& rng) {
    for (const auto& step : sequence) {
        if (step.arity < 1) {
            throw ConfigError("operator '" + step.name + "': arity must be at least 1");
        }
        if (step.probability < 0.0 || step.probability > 1.0) {
            throw ConfigError("operator '" + step.name + "': probability outside [0, 1]");
        }
        if (!step.apply) {
            throw ConfigError("operator '" + step.name + "' has no implementation");
        }
        std::size_t arity = static_cast<std::size_t>(step.arity);
        std::size_t groups = pool.size() / arity;
        for (std::size_t g = 0; g < groups; ++g) {
            if (chance(rng, step.probability)) {
                step.apply(std::span<Individual>(pool.data() + g * arity, arity), rng);
            }
        }
        // a trailing group smaller than the arity passes through unchanged
    }
    return pool;
}

} // namespace evokit
