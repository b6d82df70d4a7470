#include "evokit/gp/tree.hpp"

#include <algorithm>
#include <charconv>
#include <system_error>
#include <utility>

#include "evokit/errors.hpp"
#include "evokit/text.hpp"

namespace evokit::gp {

namespace {

double eval_prefix(const TreeGenome& genome, std::size_t& pos, std::span<const double> vars) {
    const TreeNode& node = genome.nodes()[pos++];
    switch (node.kind) {
    case TreeNode::Kind::constant:
        return node.value;
    case TreeNode::Kind::variable:
        if (static_cast<std::size_t>(node.index) >= vars.size()) {
            throw Error("execute_tree: unbound variable '" +
                        genome.terminals().variable_name(static_cast<std::size_t>(node.index)) + "'");
        }
        return vars[static_cast<std::size_t>(node.index)];
    case TreeNode::Kind::function: {
        double args[FunctionSet::max_arity];
        for (int i = 0; i < node.arity; ++i) {
            args[i] = eval_prefix(genome, pos, vars);
        }
        return genome.functions().at(static_cast<std::size_t>(node.index))
            .apply(std::span<const double>(args, static_cast<std::size_t>(node.arity)));
    }
    }
    throw Error("execute_tree: corrupt node");
}

std::string node_name(const TreeGenome& genome, const TreeNode& node) {
    switch (node.kind) {
    case TreeNode::Kind::function:
        return genome.functions().at(static_cast<std::size_t>(node.index)).name;
    case TreeNode::Kind::variable:
        return genome.terminals().variable_name(static_cast<std::size_t>(node.index));
    case TreeNode::Kind::constant:
        return format_double(node.value);
    }
    throw Error("format_tree: corrupt node");
}

} // namespace

TreeGenome::TreeGenome(std::vector<TreeNode> nodes,
                       std::shared_ptr<const FunctionSet> functions,
                       std::shared_ptr<const TerminalSet> terminals)
    : nodes_(std::move(nodes)), functions_(std::move(functions)), terminals_(std::move(terminals)) {
    if (!functions_ || !terminals_) {
        throw Error("TreeGenome: missing function or terminal set");
    }
}

const FunctionSet& TreeGenome::functions() const {
    if (!functions_) {
        throw Error("TreeGenome: no function set");
    }
    return *functions_;
}

const TerminalSet& TreeGenome::terminals() const {
    if (!terminals_) {
        throw Error("TreeGenome: no terminal set");
    }
    return *terminals_;
}

int TreeGenome::depth() const {
    int max_depth = 0;
    std::vector<int> remaining;
    for (const auto& node : nodes_) {
        max_depth = std::max<int>(max_depth, static_cast<int>(remaining.size()));
        if (node.arity > 0) {
            remaining.push_back(node.arity);
        } else {
            while (!remaining.empty() && --remaining.back() == 0) {
                remaining.pop_back();
            }
        }
    }
    return max_depth;
}

std::size_t TreeGenome::subtree_size(std::size_t pos) const {
    std::size_t needed = 1;
    std::size_t i = pos;
    while (needed > 0) {
        if (i >= nodes_.size()) {
            throw Error("subtree_size: truncated tree");
        }
        needed += static_cast<std::size_t>(nodes_[i].arity);
        --needed;
        ++i;
    }
    return i - pos;
}

double TreeGenome::execute(std::span<const double> variables) const {
    if (nodes_.empty()) {
        throw Error("execute_tree: empty tree");
    }
    std::size_t pos = 0;
    return eval_prefix(*this, pos, variables);
}

double TreeGenome::execute(const std::map<std::string, double>& bindings) const {
    std::vector<double> vars(terminals().variable_count(), 0.0);
    std::vector<char> bound(vars.size(), 0);
    for (const auto& [name, value] : bindings) {
        if (auto index = terminals().variable_index(name)) {
            vars[*index] = value;
            bound[*index] = 1;
        }
    }
    for (const auto& node : nodes_) {
        if (node.kind == TreeNode::Kind::variable && !bound[static_cast<std::size_t>(node.index)]) {
            throw Error("execute_tree: missing variable binding '" +
                        terminals().variable_name(static_cast<std::size_t>(node.index)) + "'");
        }
    }
    return execute(std::span<const double>(vars));
}

bool TreeGenome::structurally_valid() const {
    if (nodes_.empty() || !functions_ || !terminals_) {
        return false;
    }
    std::size_t needed = 1;
    std::size_t pos = 0;
    while (pos < nodes_.size() && needed > 0) {
        const auto& node = nodes_[pos];
        --needed;
        switch (node.kind) {
        case TreeNode::Kind::function: {
            if (node.index < 0 || static_cast<std::size_t>(node.index) >= functions_->size()) {
                return false;
            }
            if (node.arity != functions_->at(static_cast<std::size_t>(node.index)).arity) {
                return false;
            }
            needed += static_cast<std::size_t>(node.arity);
            break;
        }
        case TreeNode::Kind::variable:
            if (node.index < 0 ||
                static_cast<std::size_t>(node.index) >= terminals_->variable_count() || node.arity != 0) {
                return false;
            }
            break;
        case TreeNode::Kind::constant:
            if (node.arity != 0) {
                return false;
            }
            break;
        }
        ++pos;
    }
    return needed == 0 && pos == nodes_.size();
}

std::size_t tree_size(const TreeGenome& genome) {
    return genome.size();
}

int tree_depth(const TreeGenome& genome) {
    return genome.depth();
}

double execute_tree(const TreeGenome& genome, const std::map<std::string, double>& bindings) {
    return genome.execute(bindings);
}

double execute_tree(const TreeGenome& genome, std::span<const double> variables) {
    return genome.execute(variables);
}

std::string format_tree(const TreeGenome& genome) {
    std::string out;
    std::vector<int> remaining;
    for (const auto& node : genome.nodes()) {
        out.append(remaining.size() * 3, ' ');
        out += node_name(genome, node);
        out += '\n';
        if (node.arity > 0) {
            remaining.push_back(node.arity);
        } else {
            while (!remaining.empty() && --remaining.back() == 0) {
                remaining.pop_back();
            }
        }
    }
    return out;
}

TreeGenome parse_tree(std::string_view text,
                      std::shared_ptr<const FunctionSet> functions,
                      std::shared_ptr<const TerminalSet> terminals) {
    if (!functions || !terminals) {
        throw Error("parse_tree: missing function or terminal set");
    }

    struct OpenNode {
        std::size_t line;
        std::string name;
        int depth;
        int arity;
        int seen = 0;
    };

    std::vector<TreeNode> nodes;
    std::vector<OpenNode> open;

    auto finalize = [](const OpenNode& entry) {
        if (entry.seen != entry.arity) {
            throw Error("parse_tree: line " + std::to_string(entry.line) + ": '" + entry.name +
                        "' expects " + std::to_string(entry.arity) + " children, got " +
                        std::to_string(entry.seen));
        }
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start
                                                                                 : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        // permit blank padding at the end of the document only
        if (line.find_first_not_of(' ') == std::string_view::npos) {
            if (text.find_first_not_of(" \r\n", start) != std::string_view::npos) {
                throw Error("parse_tree: line " + std::to_string(line_no) + ": blank line inside tree");
            }
            continue;
        }

        std::size_t indent = line.find_first_not_of(' ');
        if (indent % 3 != 0) {
            throw Error("parse_tree: line " + std::to_string(line_no) +
                        ": indentation is not a multiple of 3 spaces");
        }
        int depth = static_cast<int>(indent / 3);
        std::string_view token = line.substr(indent);
        std::size_t token_end = token.find_last_not_of(' ');
        token = token.substr(0, token_end + 1);

        while (!open.empty() && open.back().depth >= depth) {
            finalize(open.back());
            open.pop_back();
        }
        if (depth == 0) {
            if (!nodes.empty()) {
                throw Error("parse_tree: line " + std::to_string(line_no) + ": multiple roots");
            }
        } else {
            if (open.empty() || open.back().depth != depth - 1) {
                throw Error("parse_tree: line " + std::to_string(line_no) + ": unexpected indentation");
            }
            if (open.back().seen == open.back().arity) {
                throw Error("parse_tree: line " + std::to_string(line_no) + ": '" + open.back().name +
                            "' expects " + std::to_string(open.back().arity) + " children, got more");
            }
            ++open.back().seen;
        }

        double numeric = 0.0;
        auto parsed = std::from_chars(token.data(), token.data() + token.size(), numeric);
        if (parsed.ec == std::errc{} && parsed.ptr == token.data() + token.size()) {
            nodes.push_back(TreeNode{TreeNode::Kind::constant, 0, numeric, 0});
            continue;
        }
        if (std::size_t fn = functions->find(token); fn != FunctionSet::npos) {
            int arity = functions->at(fn).arity;
            nodes.push_back(TreeNode{TreeNode::Kind::function, static_cast<int>(fn), 0.0, arity});
            open.push_back(OpenNode{line_no, std::string(token), depth, arity});
            continue;
        }
        if (auto var = terminals->variable_index(token)) {
            nodes.push_back(TreeNode{TreeNode::Kind::variable, static_cast<int>(*var), 0.0, 0});
            continue;
        }
        throw Error("parse_tree: line " + std::to_string(line_no) + ": unknown symbol '" +
                    std::string(token) + "'");
    }

    while (!open.empty()) {
        finalize(open.back());
        open.pop_back();
    }
    if (nodes.empty()) {
        throw Error("parse_tree: empty input");
    }
    return TreeGenome(std::move(nodes), std::move(functions), std::move(terminals));
}

} // namespace evokit::gp
