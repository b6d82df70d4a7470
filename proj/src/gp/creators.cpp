#include "evokit/gp/creators.hpp"

#include <utility>
#include <vector>

#include "evokit/errors.hpp"

namespace evokit::gp {

namespace {

void require_sets(const std::shared_ptr<const FunctionSet>& functions,
                  const std::shared_ptr<const TerminalSet>& terminals,
                  bool need_functions) {
    if (!terminals || terminals->empty()) {
        throw ConfigError("tree creation needs a non-empty terminal set");
    }
    if (need_functions && (!functions || functions->empty())) {
        throw ConfigError("tree creation needs a non-empty function set");
    }
}

TreeNode function_node(const FunctionSet& functions, std::size_t index) {
    return TreeNode{TreeNode::Kind::function, static_cast<int>(index), 0.0,
                    functions.at(index).arity};
}

TreeNode draw_terminal_at(const TerminalSet& terminals, std::size_t index, Rng& rng) {
    const TerminalSymbol& symbol = terminals.at(index);
    switch (symbol.kind) {
    case TerminalKind::variable:
        return TreeNode{TreeNode::Kind::variable,
                        static_cast<int>(*terminals.variable_index(symbol.name)), 0.0, 0};
    case TerminalKind::constant:
        return TreeNode{TreeNode::Kind::constant, 0, symbol.value, 0};
    case TerminalKind::erc:
        return TreeNode{TreeNode::Kind::constant, 0, uniform_real(rng, erc_low, erc_high), 0};
    }
    throw Error("draw_terminal: corrupt terminal symbol");
}

void build_full(std::vector<TreeNode>& nodes, int levels_left, const FunctionSet& functions,
                const TerminalSet& terminals, Rng& rng) {
    if (levels_left == 0) {
        nodes.push_back(draw_terminal(terminals, rng));
        return;
    }
    TreeNode node = function_node(functions, uniform_index(rng, functions.size()));
    int arity = node.arity;
    nodes.push_back(node);
    for (int i = 0; i < arity; ++i) {
        build_full(nodes, levels_left - 1, functions, terminals, rng);
    }
}

void build_grow(std::vector<TreeNode>& nodes, int levels_left, const FunctionSet& functions,
                const TerminalSet& terminals, Rng& rng) {
    if (levels_left == 0) {
        nodes.push_back(draw_terminal(terminals, rng));
        return;
    }
    // one draw decides both terminal-vs-function and which symbol, giving
    // terminal probability |T| / (|T| + |F|)
    std::size_t pick = uniform_index(rng, terminals.size() + functions.size());
    if (pick < terminals.size()) {
        nodes.push_back(draw_terminal_at(terminals, pick, rng));
        return;
    }
    TreeNode node = function_node(functions, pick - terminals.size());
    int arity = node.arity;
    nodes.push_back(node);
    for (int i = 0; i < arity; ++i) {
        build_grow(nodes, levels_left - 1, functions, terminals, rng);
    }
}

} // namespace

TreeNode draw_terminal(const TerminalSet& terminals, Rng& rng) {
    return draw_terminal_at(terminals, uniform_index(rng, terminals.size()), rng);
}

TreeGenome create_full(int depth,
                       std::shared_ptr<const FunctionSet> functions,
                       std::shared_ptr<const TerminalSet> terminals,
                       Rng& rng) {
    if (depth < 1) {
        throw ConfigError("create_full: depth must be at least 1");
    }
    require_sets(functions, terminals, true);
    std::vector<TreeNode> nodes;
    build_full(nodes, depth, *functions, *terminals, rng);
    return TreeGenome(std::move(nodes), std::move(functions), std::move(terminals));
}

TreeGenome create_grow(int max_depth,
                       std::shared_ptr<const FunctionSet> functions,
                       std::shared_ptr<const TerminalSet> terminals,
                       Rng& rng) {
    if (max_depth < 0) {
        throw ConfigError("create_grow: max_depth must be non-negative");
    }
    require_sets(functions, terminals, max_depth > 0);
    std::vector<TreeNode> nodes;
    build_grow(nodes, max_depth, *functions, *terminals, rng);
    return TreeGenome(std::move(nodes), std::move(functions), std::move(terminals));
}

TreeGenome create_ramped_half_and_half(int depth_lo,
                                       int depth_hi,
                                       std::shared_ptr<const FunctionSet> functions,
                                       std::shared_ptr<const TerminalSet> terminals,
                                       Rng& rng) {
    if (depth_lo < 1 || depth_lo > depth_hi) {
        throw ConfigError("create_ramped_half_and_half: need 1 <= lo <= hi");
    }
    int depth = uniform_int(rng, depth_lo, depth_hi);
    bool use_full = uniform_index(rng, 2) == 0;
    return use_full ? create_full(depth, std::move(functions), std::move(terminals), rng)
                    : create_grow(depth, std::move(functions), std::move(terminals), rng);
}

} // namespace evokit::gp
