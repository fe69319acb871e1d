#pragma once

#include "morient/graph.hpp"

namespace morient {

// Graph on pair indices; an edge marks two pairs no orientation satisfies
// together. pair_ids carries the original indices through kernelization.
struct ConflictGraph {
    int size = 0;
    std::vector<std::vector<bool>> adj;
    std::vector<int> pair_ids;

    bool adjacent(int i, int j) const { return adj[i][j]; }
};

// Tree pairs conflict iff their unique tree paths share an edge they need in
// opposite directions. Guaranteed K4-free.
ConflictGraph build_conflict_graph_tree(const TreeView& tree, const PairSet& pairs);

// Fixed-path variant; K4-freeness is not guaranteed here.
ConflictGraph build_conflict_graph_fixed(const FixedPathInstance& inst);

bool is_k4_free(const ConflictGraph& cg);

// (beta+2)(beta+1)beta/6 — past this many vertices, a K4-free graph always
// holds an independent set of size beta (Ramsey).
long long ramsey_kernel_bound(int beta);

// Keeps the lowest-index vertices once the graph exceeds the bound; the
// answer to "independent set of size beta?" is preserved. Refuses graphs
// with a K4, where the guarantee is void.
ConflictGraph ramsey_kernel(const ConflictGraph& cg, int beta);

// Exact maximum independent set by branching on a max-degree vertex.
// Intended for kernel-sized graphs.
std::vector<int> max_independent_set(const ConflictGraph& cg);

// True iff some orientation of the tree satisfies at least beta pairs.
// When p exceeds the kernel bound the answer is yes outright.
bool decide_mto_budget(const TreeView& tree, const PairSet& pairs, int beta);

}  // namespace morient
