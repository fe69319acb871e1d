#include "morient/conflict.hpp"

#include <algorithm>
#include <string>

namespace morient {

namespace {

ConflictGraph from_requirements(const std::vector<std::vector<signed char>>& need) {
    int p = static_cast<int>(need.size());
    ConflictGraph cg;
    cg.size = p;
    cg.adj.assign(p, std::vector<bool>(p, false));
    cg.pair_ids.resize(p);
    for (int i = 0; i < p; ++i) cg.pair_ids[i] = i;
    int m = p == 0 ? 0 : static_cast<int>(need[0].size());
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            for (int e = 0; e < m; ++e) {
                if (need[i][e] != 0 && need[j][e] != 0 && need[i][e] != need[j][e]) {
                    cg.adj[i][j] = cg.adj[j][i] = true;
                    break;
                }
            }
        }
    }
    return cg;
}

}  // namespace

ConflictGraph build_conflict_graph_tree(const TreeView& tree, const PairSet& pairs) {
    if (!tree.graph().is_undirected()) {
        throw PreconditionError("conflict graphs are built on arc-free trees");
    }
    int m = static_cast<int>(tree.graph().edges().size());
    std::vector<std::vector<signed char>> need(pairs.size(), std::vector<signed char>(m, 0));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const Pair& p = pairs[j];
        auto path = tree.path(p.s, p.t);  // empty direction set when s == t
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            auto e = tree.graph().edge_index(path[i], path[i + 1]);
            bool along = tree.graph().edges()[*e].u == path[i];
            need[j][*e] = along ? 1 : -1;
        }
    }
    return from_requirements(need);
}

ConflictGraph build_conflict_graph_fixed(const FixedPathInstance& inst) {
    int m = static_cast<int>(inst.graph().edges().size());
    std::vector<std::vector<signed char>> need(inst.paths().size(),
                                               std::vector<signed char>(m, 0));
    for (std::size_t j = 0; j < inst.paths().size(); ++j) {
        for (auto [e, along] : inst.path_edges()[j]) need[j][e] = along ? 1 : -1;
    }
    return from_requirements(need);
}

bool is_k4_free(const ConflictGraph& cg) {
    int p = cg.size;
    for (int a = 0; a < p; ++a) {
        for (int b = a + 1; b < p; ++b) {
            if (!cg.adj[a][b]) continue;
            for (int c = b + 1; c < p; ++c) {
                if (!cg.adj[a][c] || !cg.adj[b][c]) continue;
                for (int d = c + 1; d < p; ++d) {
                    if (cg.adj[a][d] && cg.adj[b][d] && cg.adj[c][d]) return false;
                }
            }
        }
    }
    return true;
}

long long ramsey_kernel_bound(int beta) {
    long long b = beta;
    return (b + 2) * (b + 1) * b / 6;
}

ConflictGraph ramsey_kernel(const ConflictGraph& cg, int beta) {
    if (beta < 1) throw ValidationError("kernelization needs beta >= 1");
    if (!is_k4_free(cg)) {
        throw PreconditionError("conflict graph contains a K4; the kernel guarantee is void");
    }
    long long bound = ramsey_kernel_bound(beta);
    if (cg.size <= bound) return cg;
    int keep = static_cast<int>(bound);
    ConflictGraph out;
    out.size = keep;
    out.adj.assign(keep, std::vector<bool>(keep, false));
    out.pair_ids.resize(keep);
    for (int i = 0; i < keep; ++i) {
        out.pair_ids[i] = cg.pair_ids[i];
        for (int j = 0; j < keep; ++j) out.adj[i][j] = cg.adj[i][j];
    }
    return out;
}

namespace {

int mis_recurse(const std::vector<std::vector<bool>>& adj, std::vector<int>& alive,
                std::vector<int>& chosen, std::vector<int>& best) {
    // find max-degree vertex among alive, lowest id on ties
    int pick = -1, pick_deg = -1;
    for (std::size_t i = 0; i < alive.size(); ++i) {
        int v = alive[i];
        int deg = 0;
        for (int w : alive) {
            if (w != v && adj[v][w]) ++deg;
        }
        if (deg > pick_deg) {
            pick_deg = deg;
            pick = v;
        }
    }
    if (pick < 0 || pick_deg == 0) {
        // edgeless remainder: take everything
        std::vector<int> total = chosen;
        total.insert(total.end(), alive.begin(), alive.end());
        if (total.size() > best.size()) best = std::move(total);
        return 0;
    }
    // include pick
    {
        std::vector<int> rest;
        for (int v : alive) {
            if (v != pick && !adj[pick][v]) rest.push_back(v);
        }
        chosen.push_back(pick);
        mis_recurse(adj, rest, chosen, best);
        chosen.pop_back();
    }
    // exclude pick
    {
        std::vector<int> rest;
        for (int v : alive) {
            if (v != pick) rest.push_back(v);
        }
        mis_recurse(adj, rest, chosen, best);
    }
    return 0;
}

}  // namespace

std::vector<int> max_independent_set(const ConflictGraph& cg) {
    std::vector<int> alive(cg.size);
    for (int i = 0; i < cg.size; ++i) alive[i] = i;
    std::vector<int> chosen, best;
    mis_recurse(cg.adj, alive, chosen, best);
    std::sort(best.begin(), best.end());
    return best;
}

bool decide_mto_budget(const TreeView& tree, const PairSet& pairs, int beta) {
    if (beta <= 0) return true;
    long long p = static_cast<long long>(pairs.size());
    if (p > ramsey_kernel_bound(beta)) return true;  // Ramsey shortcut
    ConflictGraph cg = build_conflict_graph_tree(tree, pairs);
    return static_cast<long long>(max_independent_set(cg).size()) >= beta;
}

}  // namespace morient
