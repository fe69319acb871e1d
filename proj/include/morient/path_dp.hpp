#pragma once

#include "morient/graph.hpp"

namespace morient {

// Optimal orientation of a mixed path: O(n^2) interval DP whose states are
// "the stretch [v..w] is oriented one way"; a split vertex ends a stretch
// and the two sides decompose. The witness is rebuilt from recorded argmax
// choices.
SolveResult solve_mixed_path(const MixedGraph& g, const PairSet& pairs);

// Number of pairs with both endpoints between `from` and `to` (inclusive)
// that are satisfied when that stretch is oriented from->to; zero when an
// arc inside the stretch opposes it. This is the DP's A-table entry.
int count_forward(const MixedGraph& path, int from, int to, const PairSet& pairs);

}  // namespace morient
