#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evokit/gp/primitives.hpp"

namespace evokit::gp {

struct TreeNode {
    enum class Kind { function, variable, constant };

    Kind kind = Kind::constant;
    int index = 0;    // function index / variable index
    double value = 0.0;
    int arity = 0;    // cached from the function symbol, 0 for leaves

    bool operator==(const TreeNode&) const = default;
};

/// Expression tree stored as a prefix-order node sequence. A subtree is a
/// contiguous range, which keeps uniform node selection and splicing cheap.
class TreeGenome {
public:
    TreeGenome() = default;
    TreeGenome(std::vector<TreeNode> nodes,
               std::shared_ptr<const FunctionSet> functions,
               std::shared_ptr<const TerminalSet> terminals);

    const std::vector<TreeNode>& nodes() const { return nodes_; }
    std::vector<TreeNode>& nodes() { return nodes_; }

    const FunctionSet& functions() const;
    const TerminalSet& terminals() const;
    const std::shared_ptr<const FunctionSet>& functions_ptr() const { return functions_; }
    const std::shared_ptr<const TerminalSet>& terminals_ptr() const { return terminals_; }

    std::size_t size() const { return nodes_.size(); }

    /// Edge count of the longest root-to-leaf path; a single leaf is 0.
    int depth() const;

    /// Node count of the subtree rooted at prefix position `pos`.
    std::size_t subtree_size(std::size_t pos) const;

    /// Evaluates with variables bound positionally: variables[i] feeds the
    /// terminal set's i-th variable. Throws Error when the tree reads a
    /// variable the span does not cover.
    double execute(std::span<const double> variables) const;

    /// Evaluates with variables bound by name. Throws Error naming the
    /// first variable used by the tree that is missing from the bindings.
    double execute(const std::map<std::string, double>& bindings) const;

    /// True when every function node has exactly arity children and every
    /// prefix position is accounted for.
    bool structurally_valid() const;

    /// Structural equality over the node sequence.
    bool operator==(const TreeGenome& other) const { return nodes_ == other.nodes_; }

private:
    std::vector<TreeNode> nodes_;
    std::shared_ptr<const FunctionSet> functions_;
    std::shared_ptr<const TerminalSet> terminals_;
};

std::size_t tree_size(const TreeGenome& genome);
int tree_depth(const TreeGenome& genome);
double execute_tree(const TreeGenome& genome, const std::map<std::string, double>& bindings);
double execute_tree(const TreeGenome& genome, std::span<const double> variables);

/// One node name per line, children indented 3 spaces beyond their parent,
/// every line newline-terminated, no trailing spaces. Constants print in
/// shortest round-trip decimal form.
std::string format_tree(const TreeGenome& genome);

/// Inverse of format_tree. Throws Error on unknown symbols or when the
/// indentation structure does not match a function's arity.
TreeGenome parse_tree(std::string_view text,
                      std::shared_ptr<const FunctionSet> functions,
                      std::shared_ptr<const TerminalSet> terminals);

} // namespace evokit::gp
