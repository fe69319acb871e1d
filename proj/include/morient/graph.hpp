#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "morient/errors.hpp"

namespace morient {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed edge tail -> head.
struct Arc {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Ordered source-target pair.
struct Pair {
    int s = 0;
    int t = 0;
    friend bool operator==(const Pair&, const Pair&) = default;
};

using PairSet = std::vector<Pair>;

// Mixed graph on dense vertex ids 0..n-1. Simple by construction: no
// self-loops and at most one connection (edge or arc) per unordered vertex
// pair. Edges keep their insertion order; that order indexes orientations.
class MixedGraph {
public:
    MixedGraph() = default;
    MixedGraph(int n, std::vector<std::pair<int, int>> edges,
               std::vector<std::pair<int, int>> arcs = {});

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Index into edges() for the connection {u, v}, if it is an edge.
    std::optional<int> edge_index(int u, int v) const;
    bool has_connection(int u, int v) const;

    // Neighbors over edges and arcs-as-edges, ascending, each with the
    // connection's identity: (neighbor, edge index or -1, arc index or -1).
    struct Link {
        int to;
        int edge;  // index into edges(), or -1
        int arc;   // index into arcs(), or -1
    };
    const std::vector<std::vector<Link>>& links() const { return links_; }

    int degree_undirected(int v) const;  // counts edges only
    int degree_total(int v) const { return static_cast<int>(links_[v].size()); }

    bool is_undirected() const { return arcs_.empty(); }
    bool connected_underlying() const;  // over edges plus arcs-as-edges
    bool connected_edges_only() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Link>> links_;
};

// One direction per undirected edge, aligned with MixedGraph::edges().
// forward[i] means edge i is directed from its lower to its higher endpoint.
struct Orientation {
    std::vector<bool> forward;

    static Orientation from_mask(std::uint64_t mask, int edge_count);
    std::uint64_t to_mask() const;  // edge_count must be <= 64
    friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Directed view of an oriented mixed graph: arcs plus oriented edges.
std::vector<std::pair<int, int>> directed_connections(const MixedGraph& g, const Orientation& o);

// Indices i (ascending) whose pair (s_i, t_i) admits a directed s->t path
// under the orientation. Pairs with s == t count as satisfied.
std::vector<int> satisfied_pairs(const MixedGraph& g, const Orientation& o, const PairSet& pairs);
int satisfied_count(const MixedGraph& g, const Orientation& o, const PairSet& pairs);

// A mixed graph whose undirected edges form a spanning tree. Arcs may ride
// along (the pure-tree solvers require there to be none).
class TreeView {
public:
    explicit TreeView(MixedGraph g);

    const MixedGraph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    int degree(int v) const { return g_.degree_undirected(v); }

    // Unique vertex sequence u..v along tree edges; path(u, u) = {u}.
    std::vector<int> path(int u, int v) const;

    // Neighbors over tree edges, ascending, with edge indices.
    const std::vector<std::vector<std::pair<int, int>>>& adjacency() const { return adj_; }

    std::vector<int> leaves() const;
    std::vector<int> high_degree_vertices() const;  // degree > 2

private:
    MixedGraph g_;
    std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge idx)
};

// Degree partition of a tree's vertices (Lemma: #high <= #leaves - 2).
struct VertexClasses {
    std::vector<int> leaves;
    std::vector<int> degree_two;
    std::vector<int> high_degree;
};
VertexClasses classify_vertices(const TreeView& tree);

// Pairs tied to explicit simple paths; a pair is satisfied only if its
// whole path is oriented source-to-target.
class FixedPathInstance {
public:
    FixedPathInstance(MixedGraph graph, std::vector<std::vector<int>> paths);

    const MixedGraph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& paths() const { return paths_; }
    PairSet pairs() const;

    // Edge indices along path j, with the traversal direction: true when the
    // step runs lower->higher endpoint of the stored edge.
    const std::vector<std::vector<std::pair<int, bool>>>& path_edges() const { return path_edges_; }

private:
    MixedGraph graph_;
    std::vector<std::vector<int>> paths_;
    std::vector<std::vector<std::pair<int, bool>>> path_edges_;
};

std::vector<int> satisfied_fixed_pairs(const FixedPathInstance& inst, const Orientation& o);

// Result of contracting every 2-edge-connected component to one vertex.
// The surviving edges are exactly the bridges, so the result is a tree.
struct Contraction {
    TreeView tree;
    PairSet pairs;                // endpoints mapped through vertex_map
    std::vector<int> vertex_map;  // original vertex -> tree vertex

    // lifting data
    std::vector<int> tree_edge_source;        // tree edge idx -> original edge idx
    std::vector<bool> tree_edge_same_order;   // tree edge (a,b) matches original (u,v) order
    std::vector<bool> strong_forward;         // non-bridge edges: strong orientation bit
    std::vector<bool> is_bridge;              // per original edge
};

// Requires a connected, arc-free graph. Pairs falling inside one component
// map to equal endpoints and stay in the pair set (they are always
// satisfiable through the component's strong orientation).
Contraction contract_cycles(const MixedGraph& g, const PairSet& pairs);

// Expand an orientation of the contracted tree to the original graph:
// bridges follow the tree, every contracted component gets its strong
// (DFS-based) orientation, so all mapped-pair satisfactions survive.
Orientation lift_orientation(const MixedGraph& original, const Contraction& c, const Orientation& tree_orientation);

// Shape probes shared by the solvers and the CLI dispatcher.
// A path/cycle here is over the underlying connections (edges plus arcs).
std::optional<std::vector<int>> underlying_path_order(const MixedGraph& g);
std::optional<std::vector<int>> underlying_cycle_order(const MixedGraph& g);
bool underlying_is_tree(const MixedGraph& g);

// Shared solver result: optimum count plus a witness orientation.
struct SolveResult {
    int count = 0;
    Orientation orientation;
};

}  // namespace morient
