#pragma once

#include <cstdint>
#include <vector>

#include "morient/graph.hpp"

namespace morient {

// Exhaustive ground truth. Deliberately free of cleverness: orientations are
// enumerated as bitmasks in increasing order and reachability is recomputed
// from scratch, so ties always go to the smallest mask and the code stays
// obviously correct.
struct OracleResult {
    int best_count = 0;
    Orientation witness;
    std::uint64_t explored = 0;
};

inline constexpr int kOracleEdgeCap = 20;
inline constexpr int kOracleVertexCap = 16;

// Max over all 2^|E| orientations of |satisfied_pairs|. Refuses above the
// edge cap. threads > 1 partitions the mask space; the merged result is
// identical to the single-threaded one.
OracleResult brute_force_orient(const MixedGraph& g, const PairSet& pairs,
                                int max_edges = kOracleEdgeCap, int threads = 1);

// Fixed-path variant. Only edges that two paths traverse in opposite
// directions are enumerated; every other path edge is pinned to its path's
// direction, which never hurts any pair, so the result is still exact.
// The cap applies to the number of enumerated (contested) edges.
OracleResult brute_force_fixed(const FixedPathInstance& inst,
                               int max_edges = kOracleEdgeCap, int threads = 1);

// Size of the maximum clique, by subset enumeration.
int brute_force_max_clique(const std::vector<std::vector<bool>>& adjacency,
                           int max_vertices = kOracleVertexCap);

// A maximum independent set, smallest subset mask on ties.
std::vector<int> brute_force_max_independent_set(const std::vector<std::vector<bool>>& adjacency,
                                                 int max_vertices = kOracleVertexCap);

}  // namespace morient
