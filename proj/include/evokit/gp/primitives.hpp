#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evokit::gp {

/// Named pure function usable as an internal tree node.
struct FunctionSymbol {
    std::string name;
    int arity = 2;
    std::function<double(std::span<const double>)> apply;
};

class FunctionSet {
public:
    static constexpr int max_arity = 8;
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    FunctionSet() = default;
    explicit FunctionSet(std::vector<FunctionSymbol> symbols);

    /// Rejects duplicate names, arity < 1 or > max_arity, empty semantics.
    void add(FunctionSymbol symbol);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const FunctionSymbol& at(std::size_t index) const;
    std::size_t find(std::string_view name) const;

private:
    std::vector<FunctionSymbol> symbols_;
};

enum class TerminalKind { variable, constant, erc };

/// Leaf symbol: a named input variable, a fixed constant, or an ephemeral
/// random constant slot whose value is drawn at creation time and frozen.
struct TerminalSymbol {
    TerminalKind kind = TerminalKind::constant;
    std::string name;
    double value = 0.0;

    static TerminalSymbol variable(std::string name);
    static TerminalSymbol constant(double value);
    static TerminalSymbol erc();
};

/// Ephemeral random constants are drawn uniformly from this closed range.
inline constexpr double erc_low = -5.0;
inline constexpr double erc_high = 5.0;

class TerminalSet {
public:
    TerminalSet() = default;
    explicit TerminalSet(std::vector<TerminalSymbol> symbols);

    /// Rejects duplicate variable names.
    void add(TerminalSymbol symbol);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const TerminalSymbol& at(std::size_t index) const;

    /// Variables in declaration order; a tree's variable node stores an
    /// index into this order.
    std::size_t variable_count() const { return variable_names_.size(); }
    const std::string& variable_name(std::size_t variable_index) const;
    std::optional<std::size_t> variable_index(std::string_view name) const;

private:
    std::vector<TerminalSymbol> symbols_;
    std::vector<std::string> variable_names_;
};

/// Division defined everywhere: returns 1 when |b| < 1e-9, else a / b.
double protected_div(double a, double b);

/// add, sub, mul, div (protected).
FunctionSet default_function_set();

/// Variables x, y, z plus constants 0, 1, -1.
TerminalSet default_terminal_set();

/// One variable per feature column, named x0..x{n-1}, plus the constants
/// 0, 1, -1. Throws ConfigError when feature_count is zero.
TerminalSet create_terminal_set(std::size_t feature_count);

} // namespace evokit::gp
