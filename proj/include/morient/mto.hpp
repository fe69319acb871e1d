#pragma once

#include "morient/graph.hpp"

namespace morient {

// One branch hanging off the working vertex r, cut at its first split
// vertex. vertices[0] is r, vertices.back() the leaf; the split sits at
// vertices[split_pos] (the leaf itself when the whole branch runs one way).
// Edges r..split form the co-directed "new branch"; split..leaf is the
// separated subpath that gets solved on its own.
struct BranchCut {
    std::vector<int> vertices;
    int split_pos = 1;
};

struct PairUpdate {
    PairSet residual;
    int satisfied_now = 0;
};

// Rewrites the pair set after cutting and orienting the branches of r:
//   - both endpoints on one separated subpath (split included): dropped,
//     the subpath solve owns them;
//   - an endpoint strictly inside a separated subpath, the other outside:
//     dropped, no orientation can satisfy it;
//   - an endpoint on a new branch oriented against it: dropped;
//   - an endpoint on a new branch oriented with it: endpoint becomes r;
//   - anything else survives untouched.
// branch_outward[b] means branch b is oriented r -> split vertex.
// Pairs that the branch orientations alone satisfy are tallied, not kept.
PairUpdate update_pairs(const std::vector<BranchCut>& branches,
                        const std::vector<bool>& branch_outward, const PairSet& pairs,
                        int vertex_count);

// Exact MTO on an arc-free path (delegates to the mixed-path DP).
SolveResult solve_undirected_path(const MixedGraph& g, const PairSet& pairs);

// Structural enumeration accounting for a run of mto_leaves: products of
// per-level split choices and branch orientations, and the total number of
// branch cuts. The residual trees do not depend on the choices taken, so
// these are exact counts of the distinct selections a run ranges over.
struct MtoStats {
    unsigned long long split_selections = 1;
    unsigned long long orientation_combinations = 1;
    int branch_selections = 0;
};
MtoStats enumeration_stats(const TreeView& tree);

// Exact MTO, exponential only in the leaf count: peel one high-degree
// vertex at a time, enumerate split vertices and branch orientations,
// solve separated subpaths independently, recurse on the residual tree.
SolveResult mto_leaves(const TreeView& tree, const PairSet& pairs);

}  // namespace morient
