#include "morient/mto.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "morient/path_dp.hpp"

namespace morient {

PairUpdate update_pairs(const std::vector<BranchCut>& branches,
                        const std::vector<bool>& branch_outward, const PairSet& pairs,
                        int vertex_count) {
    if (branch_outward.size() != branches.size()) {
        throw ValidationError("one orientation per branch required");
    }
    // location tables
    std::vector<int> sep_branch(vertex_count, -1);   // split..leaf, split included
    std::vector<char> sep_strict(vertex_count, 0);   // strictly past the split
    std::vector<int> nb_branch(vertex_count, -1);    // new branch, split included, r excluded
    std::vector<int> nb_pos(vertex_count, 0);
    for (std::size_t b = 0; b < branches.size(); ++b) {
        const BranchCut& cut = branches[b];
        int len = static_cast<int>(cut.vertices.size()) - 1;
        if (cut.split_pos < 1 || cut.split_pos > len) {
            throw ValidationError("split position outside branch");
        }
        for (int i = cut.split_pos; i <= len; ++i) {
            sep_branch[cut.vertices[i]] = static_cast<int>(b);
            if (i > cut.split_pos) sep_strict[cut.vertices[i]] = 1;
        }
        for (int i = 1; i <= cut.split_pos; ++i) {
            nb_branch[cut.vertices[i]] = static_cast<int>(b);
            nb_pos[cut.vertices[i]] = i;
        }
    }

    PairUpdate out;
    for (const Pair& p : pairs) {
        if (sep_branch[p.s] >= 0 && sep_branch[p.s] == sep_branch[p.t]) {
            continue;  // the separated subpath solve owns this pair
        }
        if (sep_strict[p.s] || sep_strict[p.t]) {
            continue;  // crosses a split vertex, unsatisfiable
        }
        int sb = nb_branch[p.s], tb = nb_branch[p.t];
        if (sb >= 0 && sb == tb) {
            // settled entirely by this branch's direction
            bool away_from_r = nb_pos[p.s] < nb_pos[p.t];
            if (branch_outward[sb] == away_from_r) ++out.satisfied_now;
            continue;
        }
        Pair q = p;
        if (sb >= 0) {
            if (branch_outward[sb]) continue;  // source needs the branch to flow into r
            q.s = branches[sb].vertices[0];
        }
        if (tb >= 0) {
            if (!branch_outward[tb]) continue;  // target needs the branch to flow outward
            q.t = branches[tb].vertices[0];
        }
        if (q.s == q.t) {
            ++out.satisfied_now;  // both halves run through r
            continue;
        }
        out.residual.push_back(q);
    }
    return out;
}

SolveResult solve_undirected_path(const MixedGraph& g, const PairSet& pairs) {
    if (!g.is_undirected()) throw PreconditionError("solve_undirected_path takes no arcs");
    return solve_mixed_path(g, pairs);
}

namespace {

using Fragment = std::vector<std::pair<int, bool>>;  // (tree edge id, lower->higher)

struct Peel {
    int r = -1;
    bool star = false;
    std::vector<std::vector<int>> branch_vertices;  // each [r, ..., leaf]
};

int alive_degree(const TreeView& tree, const std::vector<char>& alive, int v) {
    int d = 0;
    for (auto [w, e] : tree.adjacency()[v]) {
        (void)e;
        if (alive[w]) ++d;
    }
    return d;
}

// Walk from r through degree-2 vertices in direction `first`; returns the
// chain and whether it ends at a leaf (branch) or a high-degree vertex.
std::pair<std::vector<int>, bool> walk_chain(const TreeView& tree, const std::vector<char>& alive,
                                             int r, int first) {
    std::vector<int> seq{r, first};
    int prev = r, cur = first;
    while (alive_degree(tree, alive, cur) == 2) {
        for (auto [w, e] : tree.adjacency()[cur]) {
            (void)e;
            if (alive[w] && w != prev) {
                prev = cur;
                cur = w;
                seq.push_back(w);
                break;
            }
        }
    }
    return {seq, alive_degree(tree, alive, cur) == 1};
}

// Pick the working vertex and its branches for the current residual tree.
// Returns r = -1 when no high-degree vertex remains (path base case).
Peel pick_level(const TreeView& tree, const std::vector<char>& alive) {
    Peel out;
    std::vector<int> high;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (alive[v] && alive_degree(tree, alive, v) > 2) high.push_back(v);
    }
    if (high.empty()) return out;
    if (high.size() == 1) {
        out.r = high[0];
        out.star = true;
    } else {
        for (int v : high) {
            int far_high = 0;
            for (auto [w, e] : tree.adjacency()[v]) {
                (void)e;
                if (!alive[w]) continue;
                if (!walk_chain(tree, alive, v, w).second) ++far_high;
            }
            if (far_high == 1) {
                out.r = v;
                break;  // lowest id wins; high[] is ascending
            }
        }
        if (out.r < 0) throw std::logic_error("no peelable high-degree vertex found");
    }
    for (auto [w, e] : tree.adjacency()[out.r]) {
        (void)e;
        if (!alive[w]) continue;
        auto [seq, is_branch] = walk_chain(tree, alive, out.r, w);
        if (is_branch) out.branch_vertices.push_back(std::move(seq));
    }
    std::size_t expected = out.star ? alive_degree(tree, alive, out.r)
                                    : alive_degree(tree, alive, out.r) - 1;
    if (out.branch_vertices.size() != expected) {
        throw std::logic_error("branch accounting mismatch at the working vertex");
    }
    return out;
}

// Path base case: orient the residual chain optimally with the DP.
std::pair<int, Fragment> solve_residual_path(const TreeView& tree, const std::vector<char>& alive,
                                             const PairSet& pairs) {
    std::vector<int> verts;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (alive[v]) verts.push_back(v);
    }
    if (verts.size() <= 1) return {0, {}};

    int start = -1;
    for (int v : verts) {
        if (alive_degree(tree, alive, v) <= 1 && start < 0) start = v;
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int nxt = -1;
        for (auto [w, e] : tree.adjacency()[cur]) {
            (void)e;
            if (alive[w] && w != prev) {
                nxt = w;
                break;
            }
        }
        if (nxt < 0) break;
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    if (order.size() != verts.size()) throw std::logic_error("residual subtree is not a path");

    std::vector<int> local(tree.vertex_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_ids;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
        auto e = tree.graph().edge_index(order[i], order[i + 1]);
        edge_ids.push_back(*e);
    }
    MixedGraph pg(static_cast<int>(order.size()), edges);
    PairSet local_pairs;
    for (const Pair& p : pairs) local_pairs.push_back({local[p.s], local[p.t]});
    SolveResult res = solve_mixed_path(pg, local_pairs);

    Fragment frag;
    for (std::size_t i = 0; i < edge_ids.size(); ++i) {
        // local forward means order[i] -> order[i+1]
        bool toward_higher_pos = res.orientation.forward[i];
        int from = toward_higher_pos ? order[i] : order[i + 1];
        frag.emplace_back(edge_ids[i], tree.graph().edges()[edge_ids[i]].u == from);
    }
    return {res.count, frag};
}

struct Solver {
    const TreeView& tree;

    std::pair<int, Fragment> solve(std::vector<char> alive, const PairSet& pairs) {
        Peel level = pick_level(tree, alive);
        if (level.r < 0) return solve_residual_path(tree, alive, pairs);

        int nbranches = static_cast<int>(level.branch_vertices.size());
        std::vector<int> lens(nbranches);
        for (int b = 0; b < nbranches; ++b) {
            lens[b] = static_cast<int>(level.branch_vertices[b].size()) - 1;
        }

        // residual tree: every branch vertex except r goes away
        std::vector<char> residual_alive = alive;
        for (const auto& seq : level.branch_vertices) {
            for (std::size_t i = 1; i < seq.size(); ++i) residual_alive[seq[i]] = 0;
        }

        // separated subpath solves depend only on (branch, split position)
        std::map<std::pair<int, int>, std::pair<int, Fragment>> sep_memo;
        auto separated = [&](int b, int q) -> const std::pair<int, Fragment>& {
            auto key = std::make_pair(b, q);
            auto it = sep_memo.find(key);
            if (it != sep_memo.end()) return it->second;
            const auto& seq = level.branch_vertices[b];
            int len = lens[b];
            std::pair<int, Fragment> entry{0, {}};
            if (q < len) {
                std::vector<int> local(tree.vertex_count(), -1);
                int m = len - q + 1;
                for (int i = 0; i < m; ++i) local[seq[q + i]] = i;
                std::vector<std::pair<int, int>> edges;
                std::vector<int> edge_ids;
                for (int i = 0; i + 1 < m; ++i) {
                    edges.emplace_back(i, i + 1);
                    edge_ids.push_back(*tree.graph().edge_index(seq[q + i], seq[q + i + 1]));
                }
                MixedGraph pg(m, edges);
                PairSet sub;
                for (const Pair& p : pairs) {
                    if (local[p.s] >= 0 && local[p.t] >= 0) sub.push_back({local[p.s], local[p.t]});
                }
                SolveResult res = solve_mixed_path(pg, sub);
                entry.first = res.count;
                for (std::size_t i = 0; i < edge_ids.size(); ++i) {
                    int from = res.orientation.forward[i] ? seq[q + i] : seq[q + i + 1];
                    entry.second.emplace_back(edge_ids[i],
                                              tree.graph().edges()[edge_ids[i]].u == from);
                }
            }
            return sep_memo.emplace(key, std::move(entry)).first->second;
        };

        int best = -1;
        Fragment best_frag;

        std::vector<int> split(nbranches, 1);
        std::vector<BranchCut> cuts(nbranches);
        for (int b = 0; b < nbranches; ++b) cuts[b].vertices = level.branch_vertices[b];
        bool done = false;
        while (!done) {
            int sep_total = 0;
            for (int b = 0; b < nbranches; ++b) {
                cuts[b].split_pos = split[b];
                sep_total += separated(b, split[b]).first;
            }
            for (unsigned combo = 0; combo < (1u << nbranches); ++combo) {
                std::vector<bool> outward(nbranches);
                for (int b = 0; b < nbranches; ++b) outward[b] = ((combo >> b) & 1u) == 0;
                PairUpdate upd = update_pairs(cuts, outward, pairs, tree.vertex_count());
                auto [rec_count, rec_frag] = solve(residual_alive, upd.residual);
                int total = sep_total + upd.satisfied_now + rec_count;
                if (total > best) {
                    best = total;
                    best_frag.clear();
                    for (int b = 0; b < nbranches; ++b) {
                        const auto& sep = separated(b, split[b]);
                        best_frag.insert(best_frag.end(), sep.second.begin(), sep.second.end());
                        const auto& seq = level.branch_vertices[b];
                        for (int i = 0; i < split[b]; ++i) {
                            int from = outward[b] ? seq[i] : seq[i + 1];
                            int e = *tree.graph().edge_index(seq[i], seq[i + 1]);
                            best_frag.emplace_back(e, tree.graph().edges()[e].u == from);
                        }
                    }
                    best_frag.insert(best_frag.end(), rec_frag.begin(), rec_frag.end());
                }
            }
            // advance the split counter, last branch least significant
            done = true;
            for (int b = nbranches - 1; b >= 0; --b) {
                if (split[b] < lens[b]) {
                    ++split[b];
                    for (int c = b + 1; c < nbranches; ++c) split[c] = 1;
                    done = false;
                    break;
                }
            }
        }
        return {best, best_frag};
    }
};

}  // namespace

MtoStats enumeration_stats(const TreeView& tree) {
    MtoStats stats;
    auto saturating_mul = [](unsigned long long a, unsigned long long b) {
        if (b != 0 && a > std::numeric_limits<unsigned long long>::max() / b) {
            return std::numeric_limits<unsigned long long>::max();
        }
        return a * b;
    };
    std::vector<char> alive(tree.vertex_count(), 1);
    while (true) {
        Peel level = pick_level(tree, alive);
        if (level.r < 0) break;
        for (const auto& seq : level.branch_vertices) {
            stats.split_selections =
                saturating_mul(stats.split_selections, seq.size() - 1);
            stats.orientation_combinations = saturating_mul(stats.orientation_combinations, 2);
            stats.branch_selections += 1;
            for (std::size_t i = 1; i < seq.size(); ++i) alive[seq[i]] = 0;
        }
    }
    return stats;
}

SolveResult mto_leaves(const TreeView& tree, const PairSet& pairs) {
    if (!tree.graph().is_undirected()) {
        throw PreconditionError("mto_leaves takes an undirected tree");
    }
    int n = tree.vertex_count();
    int trivial = 0;
    PairSet work;
    for (const Pair& p : pairs) {
        if (p.s < 0 || p.s >= n || p.t < 0 || p.t >= n) {
            throw ValidationError("pair endpoint out of range");
        }
        if (p.s == p.t) {
            ++trivial;
        } else {
            work.push_back(p);
        }
    }

    Solver solver{tree};
    auto [count, frag] = solver.solve(std::vector<char>(n, 1), work);

    Orientation o;
    o.forward.assign(tree.graph().edges().size(), false);
    std::vector<char> assigned(tree.graph().edges().size(), 0);
    for (auto [e, fwd] : frag) {
        o.forward[e] = fwd;
        assigned[e] = 1;
    }
    for (char a : assigned) {
        if (!a) throw std::logic_error("solver left an edge unoriented");
    }
    return {count + trivial, o};
}

}  // namespace morient
