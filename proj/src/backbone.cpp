#include "morient/backbone.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "morient/path_dp.hpp"
#include "morient/rng.hpp"

namespace morient {

namespace {

// Walk from `v` through degree-2 vertices starting toward `first`.
std::vector<int> chain_walk(const TreeView& tree, int v, int first) {
    std::vector<int> seq{v, first};
    int prev = v, cur = first;
    while (tree.degree(cur) == 2) {
        for (auto [w, e] : tree.adjacency()[cur]) {
            (void)e;
            if (w != prev) {
                prev = cur;
                cur = w;
                seq.push_back(w);
                break;
            }
        }
    }
    return seq;
}

}  // namespace

BackboneTree build_backbone_tree(const TreeView& tree) {
    if (!tree.graph().is_undirected()) {
        throw PreconditionError("backbone structures are built on arc-free trees");
    }
    BackboneTree bt;
    bt.vertices = tree.high_degree_vertices();
    std::vector<int> id(tree.vertex_count(), -1);
    for (std::size_t i = 0; i < bt.vertices.size(); ++i) id[bt.vertices[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (int v : bt.vertices) {
        for (auto [w, e] : tree.adjacency()[v]) {
            (void)e;
            auto seq = chain_walk(tree, v, w);
            int end = seq.back();
            if (tree.degree(end) > 2 && v < end) {
                edges.emplace_back(id[v], id[end]);
                bt.edge_chains.push_back(seq);
            }
        }
    }
    bt.graph = MixedGraph(static_cast<int>(bt.vertices.size()), edges);
    return bt;
}

std::vector<std::vector<int>> decompose_min_paths(const TreeView& tree) {
    int n = tree.vertex_count();
    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);
    for (const Edge& e : tree.graph().edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        ++deg[e.u];
        ++deg[e.v];
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    auto remaining_component = [&](int start) {
        std::vector<int> comp;
        std::vector<char> vis(n, 0);
        std::queue<int> q;
        q.push(start);
        vis[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : adj[v]) {
                if (!vis[w]) {
                    vis[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        return comp;
    };

    std::vector<std::vector<int>> paths;
    while (true) {
        // lowest-id leaf of the remaining forest
        int v1 = -1;
        for (int v = 0; v < n && v1 < 0; ++v) {
            if (deg[v] == 1) v1 = v;
        }
        if (v1 < 0) break;  // no edges left
        auto comp = remaining_component(v1);
        int v2 = -1;
        for (int v : comp) {
            if (v != v1 && deg[v] == 1) {
                v2 = v;
                break;
            }
        }
        // a component with edges has at least two leaves
        if (v2 < 0) throw std::logic_error("leaf pairing failed in path decomposition");

        // unique v1..v2 path in the remaining forest
        std::vector<int> parent(n, -1);
        std::queue<int> q;
        q.push(v1);
        parent[v1] = v1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == v2) break;
            for (int w : adj[v]) {
                if (parent[w] < 0) {
                    parent[w] = v;
                    q.push(w);
                }
            }
        }
        std::vector<int> path;
        for (int x = v2; x != v1; x = parent[x]) path.push_back(x);
        path.push_back(v1);
        std::reverse(path.begin(), path.end());

        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int a = path[i], b = path[i + 1];
            adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
            adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
            --deg[a];
            --deg[b];
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

BackboneDecomposition build_decomposition(const TreeView& tree) {
    if (!tree.graph().is_undirected()) {
        throw PreconditionError("backbone structures are built on arc-free trees");
    }
    int m = static_cast<int>(tree.graph().edges().size());
    BackboneDecomposition out;
    out.unit_of_edge.assign(m, -1);

    auto canonical = [](Unit u) {
        if (!u.vertices.empty() && u.vertices.front() > u.vertices.back()) {
            std::reverse(u.vertices.begin(), u.vertices.end());
            std::reverse(u.edge_ids.begin(), u.edge_ids.end());
        }
        return u;
    };
    auto push_unit = [&](Unit u) {
        int idx = static_cast<int>(out.units.size());
        for (int e : u.edge_ids) {
            if (out.unit_of_edge[e] != -1) throw std::logic_error("edge assigned to two units");
            out.unit_of_edge[e] = idx;
        }
        out.units.push_back(std::move(u));
    };

    std::vector<int> high = tree.high_degree_vertices();
    if (high.size() >= 2) {
        BackboneTree bt = build_backbone_tree(tree);
        auto bt_paths = decompose_min_paths(TreeView(bt.graph));
        out.backbone_count = static_cast<int>(bt_paths.size());
        for (const auto& bp : bt_paths) {
            Unit u;
            u.is_backbone = true;
            u.vertices.push_back(bt.vertices[bp.front()]);
            for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
                int a = bt.vertices[bp[i]];
                auto e = bt.graph.edge_index(bp[i], bp[i + 1]);
                std::vector<int> chain = bt.edge_chains[*e];
                if (chain.front() != a) std::reverse(chain.begin(), chain.end());
                for (std::size_t j = 1; j < chain.size(); ++j) {
                    u.edge_ids.push_back(*tree.graph().edge_index(chain[j - 1], chain[j]));
                    u.vertices.push_back(chain[j]);
                }
            }
            push_unit(canonical(std::move(u)));
        }
    }

    if (!high.empty()) {
        for (int h : high) {
            for (auto [w, e] : tree.adjacency()[h]) {
                if (out.unit_of_edge[e] != -1) continue;
                auto seq = chain_walk(tree, h, w);
                if (tree.degree(seq.back()) != 1) {
                    throw std::logic_error("branch chain does not end at a leaf");
                }
                Unit u;
                u.vertices = seq;
                for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                    u.edge_ids.push_back(*tree.graph().edge_index(seq[i], seq[i + 1]));
                }
                push_unit(canonical(std::move(u)));
            }
        }
    } else if (tree.vertex_count() >= 2) {
        // bare path: one branch unit spanning the whole tree
        int start = 0;
        while (tree.degree(start) != 1) ++start;
        auto seq = chain_walk(tree, start, tree.adjacency()[start].front().first);
        Unit u;
        u.vertices = seq;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            u.edge_ids.push_back(*tree.graph().edge_index(seq[i], seq[i + 1]));
        }
        push_unit(canonical(std::move(u)));
    }

    for (int e = 0; e < m; ++e) {
        if (out.unit_of_edge[e] == -1) throw std::logic_error("edge not covered by any unit");
    }
    return out;
}

namespace {

Orientation orientation_from_directions(const TreeView& tree, const BackboneDecomposition& decomp,
                                        const std::vector<bool>& along) {
    Orientation o;
    o.forward.assign(tree.graph().edges().size(), false);
    for (std::size_t u = 0; u < decomp.units.size(); ++u) {
        const Unit& unit = decomp.units[u];
        for (std::size_t i = 0; i < unit.edge_ids.size(); ++i) {
            int from = along[u] ? unit.vertices[i] : unit.vertices[i + 1];
            int e = unit.edge_ids[i];
            o.forward[e] = tree.graph().edges()[e].u == from;
        }
    }
    return o;
}

struct PairDemand {
    std::vector<std::pair<int, bool>> needs;  // (unit, along?)
};

// Per nontrivial pair, the direction its path demands of each touched unit.
std::vector<PairDemand> pair_demands(const TreeView& tree, const BackboneDecomposition& decomp,
                                     const PairSet& pairs, int backbone_count) {
    std::vector<PairDemand> out;
    out.reserve(pairs.size());
    for (const Pair& p : pairs) {
        PairDemand d;
        auto path = tree.path(p.s, p.t);
        int branch_touches = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int e = *tree.graph().edge_index(path[i], path[i + 1]);
            int u = decomp.unit_of_edge[e];
            const Unit& unit = decomp.units[u];
            // position of e inside the unit tells the unit's own step direction
            std::size_t k = 0;
            while (unit.edge_ids[k] != e) ++k;
            bool along = unit.vertices[k] == path[i];
            bool found = false;
            for (auto& [uu, dd] : d.needs) {
                if (uu == u) {
                    if (dd != along) throw std::logic_error("pair demands both unit directions");
                    found = true;
                }
            }
            if (!found) {
                d.needs.emplace_back(u, along);
                if (!unit.is_backbone) ++branch_touches;
            }
        }
        if (branch_touches > 2) throw std::logic_error("pair path touches more than 2 branch units");
        if (static_cast<int>(d.needs.size()) > backbone_count + 2) {
            throw std::logic_error("pair path touches more than b+2 units");
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

Orientation orient_random(const BackboneDecomposition& decomp, std::uint64_t seed) {
    (void)decomp;
    throw std::logic_error("orient_random requires the tree; use the two-argument overload");
}

SolveResult orient_derandomized(const TreeView& tree, const BackboneDecomposition& decomp,
                                const PairSet& pairs) {
    int trivial = 0;
    PairSet work;
    for (const Pair& p : pairs) {
        if (p.s == p.t) {
            ++trivial;
        } else {
            work.push_back(p);
        }
    }
    auto demands = pair_demands(tree, decomp, work, decomp.backbone_count);

    int max_touched = 0;
    for (const auto& d : demands) {
        max_touched = std::max(max_touched, static_cast<int>(d.needs.size()));
    }
    if (max_touched > 62) throw PreconditionError("instance too large for exact expectations");

    // scaled numerators: pair weight = 2^(max_touched - unfixed touched units)
    std::vector<unsigned long long> weight(work.size());
    std::vector<char> alive(work.size(), 1);
    for (std::size_t j = 0; j < work.size(); ++j) {
        weight[j] = 1ULL << (max_touched - static_cast<int>(demands[j].needs.size()));
    }

    std::vector<bool> along(decomp.units.size(), true);
    for (std::size_t u = 0; u < decomp.units.size(); ++u) {
        unsigned long long e_along = 0, e_rev = 0;
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (!alive[j]) continue;
            bool touches = false, need_along = false;
            for (auto [uu, dd] : demands[j].needs) {
                if (uu == static_cast<int>(u)) {
                    touches = true;
                    need_along = dd;
                }
            }
            if (!touches) {
                e_along += weight[j];
                e_rev += weight[j];
            } else if (need_along) {
                e_along += 2 * weight[j];
            } else {
                e_rev += 2 * weight[j];
            }
        }
        along[u] = e_along >= e_rev;  // tie: run from the lower-id endpoint
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (!alive[j]) continue;
            for (auto [uu, dd] : demands[j].needs) {
                if (uu == static_cast<int>(u)) {
                    if (dd == along[u]) {
                        weight[j] *= 2;
                    } else {
                        alive[j] = 0;
                    }
                }
            }
        }
    }

    int satisfied = trivial;
    for (char a : alive) satisfied += a;

    int p_total = static_cast<int>(pairs.size());
    long long denom = 1LL << (decomp.backbone_count + 2);
    long long floor_bound = (p_total + denom - 1) / denom;
    if (satisfied < floor_bound) {
        throw std::logic_error("conditional expectation fell below the guarantee");
    }
    return {satisfied, orientation_from_directions(tree, decomp, along)};
}

namespace {

Orientation random_unit_orientation(const TreeView& tree, const BackboneDecomposition& decomp,
                                    std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<bool> along(decomp.units.size());
    for (std::size_t u = 0; u < decomp.units.size(); ++u) along[u] = !rng.next_bool();
    return orientation_from_directions(tree, decomp, along);
}

}  // namespace

Orientation orient_random(const TreeView& tree, const BackboneDecomposition& decomp,
                          std::uint64_t seed) {
    return random_unit_orientation(tree, decomp, seed);
}

SolveResult approx_backbone(const TreeView& tree, const PairSet& pairs) {
    if (tree.high_degree_vertices().empty() && tree.vertex_count() >= 2) {
        return solve_mixed_path(tree.graph(), pairs);  // exact beats the unit scheme on paths
    }
    auto decomp = build_decomposition(tree);
    return orient_derandomized(tree, decomp, pairs);
}

SolveResult approx_backbone_random(const TreeView& tree, const PairSet& pairs,
                                   std::uint64_t seed) {
    if (tree.high_degree_vertices().empty() && tree.vertex_count() >= 2) {
        return solve_mixed_path(tree.graph(), pairs);
    }
    auto decomp = build_decomposition(tree);
    Orientation o = orient_random(tree, decomp, seed);
    return {satisfied_count(tree.graph(), o, pairs), o};
}

}  // namespace morient
