#pragma once

#include <memory>

#include "evokit/gp/tree.hpp"
#include "evokit/rng.hpp"

namespace evokit::gp {

/// Full method: every internal node is a uniformly drawn function, every
/// leaf sits at exactly `depth`. Throws ConfigError when depth < 1 or a
/// set is empty.
TreeGenome create_full(int depth,
                       std::shared_ptr<const FunctionSet> functions,
                       std::shared_ptr<const TerminalSet> terminals,
                       Rng& rng);

/// Grow method: at each node above `max_depth` a terminal is chosen with
/// probability |T| / (|T| + |F|), otherwise a function; at `max_depth`
/// only terminals. The result's depth is at most `max_depth`.
TreeGenome create_grow(int max_depth,
                       std::shared_ptr<const FunctionSet> functions,
                       std::shared_ptr<const TerminalSet> terminals,
                       Rng& rng);

/// Ramped half-and-half: draws a depth uniformly from [depth_lo, depth_hi]
/// and builds with the full or grow method, each with probability 1/2.
/// Requires 1 <= depth_lo <= depth_hi.
TreeGenome create_ramped_half_and_half(int depth_lo,
                                       int depth_hi,
                                       std::shared_ptr<const FunctionSet> functions,
                                       std::shared_ptr<const TerminalSet> terminals,
                                       Rng& rng);

/// Uniform draw over the terminal set; an ERC entry freezes a fresh value
/// from [erc_low, erc_high] into the leaf.
TreeNode draw_terminal(const TerminalSet& terminals, Rng& rng);

} // namespace evokit::gp
