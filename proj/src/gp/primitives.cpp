#include "evokit/gp/primitives.hpp"

#include <cmath>
#include <utility>

#include "evokit/errors.hpp"

namespace evokit::gp {

FunctionSet::FunctionSet(std::vector<FunctionSymbol> symbols) {
    for (auto& symbol : symbols) {
        add(std::move(symbol));
    }
}

void FunctionSet::add(FunctionSymbol symbol) {
    if (symbol.name.empty()) {
        throw ConfigError("function symbol needs a name");
    }
    if (symbol.arity < 1 || symbol.arity > max_arity) {
        throw ConfigError("function '" + symbol.name + "' has unsupported arity");
    }
    if (!symbol.apply) {
        throw ConfigError("function '" + symbol.name + "' has no semantics");
    }
    if (find(symbol.name) != npos) {
        throw ConfigError("duplicate function symbol '" + symbol.name + "'");
    }
    symbols_.push_back(std::move(symbol));
}

const FunctionSymbol& FunctionSet::at(std::size_t index) const {
    return symbols_.at(index);
}

std::size_t FunctionSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) {
            return i;
        }
    }
    return npos;
}

TerminalSymbol TerminalSymbol::variable(std::string name) {
    return TerminalSymbol{TerminalKind::variable, std::move(name), 0.0};
}

TerminalSymbol TerminalSymbol::constant(double value) {
    return TerminalSymbol{TerminalKind::constant, {}, value};
}

TerminalSymbol TerminalSymbol::erc() {
    return TerminalSymbol{TerminalKind::erc, {}, 0.0};
}

TerminalSet::TerminalSet(std::vector<TerminalSymbol> symbols) {
    for (auto& symbol : symbols) {
        add(std::move(symbol));
    }
}

void TerminalSet::add(TerminalSymbol symbol) {
    if (symbol.kind == TerminalKind::variable) {
        if (symbol.name.empty()) {
            throw ConfigError("variable terminal needs a name");
        }
        if (variable_index(symbol.name)) {
            throw ConfigError("duplicate variable '" + symbol.name + "'");
        }
        variable_names_.push_back(symbol.name);
    }
    symbols_.push_back(std::move(symbol));
}

const TerminalSymbol& TerminalSet::at(std::size_t index) const {
    return symbols_.at(index);
}

const std::string& TerminalSet::variable_name(std::size_t variable_index) const {
    return variable_names_.at(variable_index);
}

std::optional<std::size_t> TerminalSet::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < variable_names_.size(); ++i) {
        if (variable_names_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

double protected_div(double a, double b) {
    if (std::fabs(b) < 1e-9) {
        return 1.0;
    }
    return a / b;
}

FunctionSet default_function_set() {
    FunctionSet set;
    set.add({"add", 2, [](std::span<const double> a) { return a[0] + a[1]; }});
    set.add({"sub", 2, [](std::span<const double> a) { return a[0] - a[1]; }});
    set.add({"mul", 2, [](std::span<const double> a) { return a[0] * a[1]; }});
    set.add({"div", 2, [](std::span<const double> a) { return protected_div(a[0], a[1]); }});
    return set;
}

TerminalSet default_terminal_set() {
    TerminalSet set;
    set.add(TerminalSymbol::variable("x"));
    set.add(TerminalSymbol::variable("y"));
    set.add(TerminalSymbol::variable("z"));
    set.add(TerminalSymbol::constant(0.0));
    set.add(TerminalSymbol::constant(1.0));
    set.add(TerminalSymbol::constant(-1.0));
    return set;
}

TerminalSet create_terminal_set(std::size_t feature_count) {
    if (feature_count == 0) {
        throw ConfigError("create_terminal_set: feature matrix has no columns");
    }
    TerminalSet set;
    for (std::size_t i = 0; i < feature_count; ++i) {
        set.add(TerminalSymbol::variable("x" + std::to_string(i)));
    }
    set.add(TerminalSymbol::constant(0.0));
    set.add(TerminalSymbol::constant(1.0));
    set.add(TerminalSymbol::constant(-1.0));
    return set;
}

} // namespace evokit::gp
