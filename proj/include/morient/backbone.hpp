#pragma once

#include <cstdint>

#include "morient/graph.hpp"

namespace morient {

// Contraction of all degree-1/degree-2 chains: vertices are the tree's
// high-degree vertices, adjacency is far-adjacency, and every edge carries
// the chain of original vertices it stands for.
struct BackboneTree {
    std::vector<int> vertices;                     // high-degree vertices of T, ascending
    MixedGraph graph;                              // tree on 0..|vertices|-1
    std::vector<std::vector<int>> edge_chains;     // per edge: original path between its ends
};

BackboneTree build_backbone_tree(const TreeView& tree);

// Minimum edge-disjoint path cover of a tree: exactly (odd-degree count)/2
// paths, built by repeatedly peeling a leaf-to-leaf path.
std::vector<std::vector<int>> decompose_min_paths(const TreeView& tree);

// One co-directed piece of the edge partition.
struct Unit {
    std::vector<int> vertices;   // canonical: lower-id endpoint first
    std::vector<int> edge_ids;   // aligned with consecutive vertex steps
    bool is_backbone = false;
};

// Edge partition of the tree into b backbones (lifted backbone-tree paths
// covering every high-degree vertex) and the leftover branch chains.
struct BackboneDecomposition {
    TreeView tree;
    std::vector<Unit> units;          // backbones first, then branches
    int backbone_count = 0;           // b
    std::vector<int> unit_of_edge;    // tree edge -> unit index
};

BackboneDecomposition build_decomposition(const TreeView& tree);

// Each unit independently takes one of its two end-to-end directions,
// driven by the seed. Same seed, same orientation.
Orientation orient_random(const BackboneDecomposition& decomp, std::uint64_t seed);

// Method of conditional expectations over the unit directions: fixes one
// unit at a time toward the larger conditional expected count, computed in
// exact power-of-two arithmetic. Returns at least ceil(p / 2^(b+2)).
SolveResult orient_derandomized(const BackboneDecomposition& decomp, const PairSet& pairs);

// Solver entries: the backbone scheme, except that bare paths (no
// high-degree vertex) go to the exact path DP, which is never worse.
SolveResult approx_backbone(const TreeView& tree, const PairSet& pairs);
SolveResult approx_backbone_random(const TreeView& tree, const PairSet& pairs, std::uint64_t seed);

}  // namespace morient
