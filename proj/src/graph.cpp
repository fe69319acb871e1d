#include "morient/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace morient {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw ValidationError(std::string(what) + " endpoint " + std::to_string(v) +
                              " out of range [0," + std::to_string(n) + ")");
    }
}

}  // namespace

MixedGraph::MixedGraph(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<std::pair<int, int>> arcs)
    : n_(n) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    links_.resize(n_);
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u, n_, "edge");
        check_vertex(v, n_, "edge");
        if (u == v) throw ValidationError("self-loop edge at vertex " + std::to_string(u));
        int lo = std::min(u, v), hi = std::max(u, v);
        if (!seen.insert({lo, hi}).second) {
            throw ValidationError("duplicate connection between " + std::to_string(lo) + " and " +
                                  std::to_string(hi));
        }
        int idx = static_cast<int>(edges_.size());
        edges_.push_back({lo, hi});
        links_[lo].push_back({hi, idx, -1});
        links_[hi].push_back({lo, idx, -1});
    }
    arcs_.reserve(arcs.size());
    for (auto [tail, head] : arcs) {
        check_vertex(tail, n_, "arc");
        check_vertex(head, n_, "arc");
        if (tail == head) throw ValidationError("self-loop arc at vertex " + std::to_string(tail));
        int lo = std::min(tail, head), hi = std::max(tail, head);
        if (!seen.insert({lo, hi}).second) {
            throw ValidationError("duplicate connection between " + std::to_string(lo) + " and " +
                                  std::to_string(hi));
        }
        int idx = static_cast<int>(arcs_.size());
        arcs_.push_back({tail, head});
        links_[tail].push_back({head, -1, idx});
        links_[head].push_back({tail, -1, idx});
    }
    for (auto& ls : links_) {
        std::sort(ls.begin(), ls.end(), [](const Link& a, const Link& b) { return a.to < b.to; });
    }
}

std::optional<int> MixedGraph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    for (const Link& l : links_[u]) {
        if (l.to == v && l.edge >= 0) return l.edge;
    }
    return std::nullopt;
}

bool MixedGraph::has_connection(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    for (const Link& l : links_[u]) {
        if (l.to == v) return true;
    }
    return false;
}

int MixedGraph::degree_undirected(int v) const {
    int d = 0;
    for (const Link& l : links_[v]) {
        if (l.edge >= 0) ++d;
    }
    return d;
}

namespace {

int count_reached(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> vis(adj.size(), 0);
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int seen = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!vis[w]) {
                vis[w] = 1;
                ++seen;
                q.push(w);
            }
        }
    }
    return seen;
}

}  // namespace

bool MixedGraph::connected_underlying() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (int v = 0; v < n_; ++v) {
        for (const Link& l : links_[v]) adj[v].push_back(l.to);
    }
    return count_reached(adj, 0) == n_;
}

bool MixedGraph::connected_edges_only() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return count_reached(adj, 0) == n_;
}

Orientation Orientation::from_mask(std::uint64_t mask, int edge_count) {
    Orientation o;
    o.forward.resize(edge_count);
    for (int i = 0; i < edge_count; ++i) o.forward[i] = ((mask >> i) & 1ULL) == 0;
    return o;
}

std::uint64_t Orientation::to_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < forward.size(); ++i) {
        if (!forward[i]) m |= (1ULL << i);
    }
    return m;
}

std::vector<std::pair<int, int>> directed_connections(const MixedGraph& g, const Orientation& o) {
    if (o.forward.size() != g.edges().size()) {
        throw InvalidOrientationError("orientation covers " + std::to_string(o.forward.size()) +
                                      " edges, graph has " + std::to_string(g.edges().size()));
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edges().size() + g.arcs().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (o.forward[i]) {
            out.emplace_back(e.u, e.v);
        } else {
            out.emplace_back(e.v, e.u);
        }
    }
    for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head);
    return out;
}

std::vector<int> satisfied_pairs(const MixedGraph& g, const Orientation& o, const PairSet& pairs) {
    auto dirs = directed_connections(g, o);
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (auto [from, to] : dirs) adj[from].push_back(to);

    for (const Pair& p : pairs) {
        check_vertex(p.s, n, "pair");
        check_vertex(p.t, n, "pair");
    }

    // one BFS per distinct source
    std::vector<int> result;
    std::vector<char> reach(n, 0);
    std::vector<int> stack;
    int last_source = -1;
    std::vector<int> order(pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pairs[a].s < pairs[b].s; });
    for (int idx : order) {
        const Pair& p = pairs[idx];
        if (p.s != last_source) {
            std::fill(reach.begin(), reach.end(), 0);
            stack.assign(1, p.s);
            reach[p.s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v]) {
                    if (!reach[w]) {
                        reach[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            last_source = p.s;
        }
        if (reach[p.t]) result.push_back(idx);
    }
    std::sort(result.begin(), result.end());
    return result;
}

int satisfied_count(const MixedGraph& g, const Orientation& o, const PairSet& pairs) {
    return static_cast<int>(satisfied_pairs(g, o, pairs).size());
}

TreeView::TreeView(MixedGraph g) : g_(std::move(g)) {
    int n = g_.vertex_count();
    if (static_cast<int>(g_.edges().size()) != std::max(0, n - 1) || !g_.connected_edges_only()) {
        throw ValidationError("undirected edges do not form a spanning tree");
    }
    adj_.resize(n);
    for (std::size_t i = 0; i < g_.edges().size(); ++i) {
        const Edge& e = g_.edges()[i];
        adj_[e.u].emplace_back(e.v, static_cast<int>(i));
        adj_[e.v].emplace_back(e.u, static_cast<int>(i));
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<int> TreeView::path(int u, int v) const {
    int n = vertex_count();
    check_vertex(u, n, "path");
    check_vertex(v, n, "path");
    if (u == v) return {u};
    std::vector<int> parent(n, -1);
    std::queue<int> q;
    q.push(u);
    parent[u] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (auto [y, e] : adj_[x]) {
            (void)e;
            if (parent[y] < 0) {
                parent[y] = x;
                q.push(y);
            }
        }
    }
    std::vector<int> rev;
    for (int x = v; x != u; x = parent[x]) rev.push_back(x);
    rev.push_back(u);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<int> TreeView::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v) {
        if (degree(v) == 1) out.push_back(v);
    }
    return out;
}

std::vector<int> TreeView::high_degree_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v) {
        if (degree(v) > 2) out.push_back(v);
    }
    return out;
}

VertexClasses classify_vertices(const TreeView& tree) {
    if (tree.vertex_count() < 2) {
        throw PreconditionError("classify_vertices needs a tree with at least 2 vertices");
    }
    VertexClasses c;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        int d = tree.degree(v);
        if (d == 1) {
            c.leaves.push_back(v);
        } else if (d == 2) {
            c.degree_two.push_back(v);
        } else {
            c.high_degree.push_back(v);
        }
    }
    if (c.leaves.size() >= 2 &&
        c.high_degree.size() > c.leaves.size() - 2) {
        throw std::logic_error("degree accounting violated: more high-degree vertices than leaves - 2");
    }
    return c;
}

FixedPathInstance::FixedPathInstance(MixedGraph graph, std::vector<std::vector<int>> paths)
    : graph_(std::move(graph)), paths_(std::move(paths)) {
    if (!graph_.is_undirected()) {
        throw ValidationError("fixed-path instances are defined on undirected graphs");
    }
    path_edges_.resize(paths_.size());
    for (std::size_t j = 0; j < paths_.size(); ++j) {
        const auto& p = paths_[j];
        if (p.empty()) throw ValidationError("fixed path " + std::to_string(j) + " is empty");
        std::set<int> seen;
        for (int v : p) {
            check_vertex(v, graph_.vertex_count(), "fixed path");
            if (!seen.insert(v).second) {
                throw ValidationError("fixed path " + std::to_string(j) + " repeats vertex " +
                                      std::to_string(v));
            }
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            auto e = graph_.edge_index(p[i], p[i + 1]);
            if (!e) {
                throw ValidationError("fixed path " + std::to_string(j) + " uses missing edge " +
                                      std::to_string(p[i]) + "-" + std::to_string(p[i + 1]));
            }
            bool along = graph_.edges()[*e].u == p[i];
            path_edges_[j].emplace_back(*e, along);
        }
    }
}

PairSet FixedPathInstance::pairs() const {
    PairSet out;
    out.reserve(paths_.size());
    for (const auto& p : paths_) out.push_back({p.front(), p.back()});
    return out;
}

std::vector<int> satisfied_fixed_pairs(const FixedPathInstance& inst, const Orientation& o) {
    if (o.forward.size() != inst.graph().edges().size()) {
        throw InvalidOrientationError("orientation does not match the instance's edge set");
    }
    std::vector<int> out;
    for (std::size_t j = 0; j < inst.paths().size(); ++j) {
        bool ok = true;
        for (auto [e, along] : inst.path_edges()[j]) {
            if (o.forward[e] != along) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(static_cast<int>(j));
    }
    return out;
}

namespace {

// Iterative DFS computing bridges plus a strong orientation of every
// non-bridge edge (tree edges away from the root, back edges upward).
struct BridgeScan {
    std::vector<bool> is_bridge;
    std::vector<bool> strong_forward;  // meaningful for non-bridges
};

BridgeScan scan_bridges(const MixedGraph& g) {
    int n = g.vertex_count();
    int m = static_cast<int>(g.edges().size());
    BridgeScan out;
    out.is_bridge.assign(m, false);
    out.strong_forward.assign(m, false);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> edge_done(m, false);
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& ls = g.links()[f.v];
            bool descended = false;
            while (f.next < ls.size()) {
                const MixedGraph::Link l = ls[f.next++];
                if (l.edge < 0) continue;  // arcs are not part of contraction
                if (l.edge == f.parent_edge) continue;
                if (disc[l.to] < 0) {
                    disc[l.to] = low[l.to] = timer++;
                    // tree edge oriented v -> child
                    out.strong_forward[l.edge] = (g.edges()[l.edge].u == f.v);
                    edge_done[l.edge] = true;
                    stack.push_back({l.to, l.edge, 0});
                    descended = true;
                    break;
                }
                low[f.v] = std::min(low[f.v], disc[l.to]);
                if (!edge_done[l.edge] && disc[l.to] < disc[f.v]) {
                    // back edge oriented v -> ancestor
                    out.strong_forward[l.edge] = (g.edges()[l.edge].u == f.v);
                    edge_done[l.edge] = true;
                }
            }
            if (descended) continue;
            int child = f.v;
            int up_edge = f.parent_edge;
            stack.pop_back();
            if (!stack.empty()) {
                int parent = stack.back().v;
                low[parent] = std::min(low[parent], low[child]);
                if (low[child] > disc[parent]) out.is_bridge[up_edge] = true;
            }
        }
    }
    return out;
}

}  // namespace

Contraction contract_cycles(const MixedGraph& g, const PairSet& pairs) {
    if (!g.is_undirected()) throw PreconditionError("contract_cycles requires an arc-free graph");
    if (!g.connected_edges_only()) {
        throw PreconditionError("contract_cycles requires a connected graph; solve per component");
    }
    int n = g.vertex_count();
    BridgeScan scan = scan_bridges(g);

    // 2-edge-connected components: flood over non-bridge edges
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        comp[v] = comp_count;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& l : g.links()[x]) {
                if (l.edge < 0 || scan.is_bridge[l.edge]) continue;
                if (comp[l.to] < 0) {
                    comp[l.to] = comp_count;
                    stack.push_back(l.to);
                }
            }
        }
        ++comp_count;
    }

    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> tree_edge_source;
    std::vector<bool> same_order;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!scan.is_bridge[i]) continue;
        const Edge& e = g.edges()[i];
        int a = comp[e.u], b = comp[e.v];
        tree_edges.emplace_back(a, b);
        tree_edge_source.push_back(static_cast<int>(i));
        same_order.push_back(a < b);
    }

    MixedGraph tg(comp_count, tree_edges);
    PairSet mapped;
    mapped.reserve(pairs.size());
    for (const Pair& p : pairs) {
        check_vertex(p.s, n, "pair");
        check_vertex(p.t, n, "pair");
        mapped.push_back({comp[p.s], comp[p.t]});
    }

    return Contraction{TreeView(std::move(tg)), std::move(mapped), std::move(comp),
                       std::move(tree_edge_source), std::move(same_order),
                       std::move(scan.strong_forward), std::move(scan.is_bridge)};
}

Orientation lift_orientation(const MixedGraph& original, const Contraction& c,
                             const Orientation& tree_orientation) {
    if (tree_orientation.forward.size() != c.tree.graph().edges().size()) {
        throw InvalidOrientationError("tree orientation does not match the contracted tree");
    }
    Orientation out;
    out.forward.assign(original.edges().size(), false);
    for (std::size_t i = 0; i < original.edges().size(); ++i) {
        if (!c.is_bridge[i]) out.forward[i] = c.strong_forward[i];
    }
    for (std::size_t t = 0; t < c.tree_edge_source.size(); ++t) {
        bool fwd = tree_orientation.forward[t];
        if (!c.tree_edge_same_order[t]) fwd = !fwd;
        out.forward[c.tree_edge_source[t]] = fwd;
    }
    return out;
}

std::optional<std::vector<int>> underlying_path_order(const MixedGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) {
        if (g.edges().empty() && g.arcs().empty()) return std::vector<int>{0};
        return std::nullopt;
    }
    if (static_cast<int>(g.edges().size() + g.arcs().size()) != n - 1) return std::nullopt;
    int start = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree_total(v);
        if (d == 0 || d > 2) return std::nullopt;
        if (d == 1 && start < 0) start = v;
    }
    if (start < 0) return std::nullopt;
    // walk from the lower-id endpoint for a deterministic order
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int nxt = -1;
        for (const auto& l : g.links()[cur]) {
            if (l.to != prev) {
                nxt = l.to;
                break;
            }
        }
        if (nxt < 0) return std::nullopt;
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

std::optional<std::vector<int>> underlying_cycle_order(const MixedGraph& g) {
    int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    if (static_cast<int>(g.edges().size() + g.arcs().size()) != n) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (g.degree_total(v) != 2) return std::nullopt;
    }
    if (!g.connected_underlying()) return std::nullopt;
    // start at vertex 0, step toward its lower-id neighbor
    std::vector<int> order{0};
    int prev = 0;
    int cur = g.links()[0].front().to;
    order.push_back(cur);
    while (static_cast<int>(order.size()) < n) {
        int nxt = -1;
        for (const auto& l : g.links()[cur]) {
            if (l.to != prev) {
                nxt = l.to;
                break;
            }
        }
        prev = cur;
        cur = nxt;
        order.push_back(cur);
    }
    return order;
}

bool underlying_is_tree(const MixedGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (static_cast<int>(g.edges().size() + g.arcs().size()) != n - 1) return false;
    return g.connected_underlying();
}

}  // namespace morient
