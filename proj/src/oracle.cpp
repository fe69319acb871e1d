#include "morient/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace morient {

namespace {

struct Best {
    int count = -1;
    std::uint64_t mask = 0;

    void offer(int c, std::uint64_t m) {
        if (c > count || (c == count && m < mask)) {
            count = c;
            mask = m;
        }
    }
    void merge(const Best& other) { offer(other.count, other.mask); }
};

template <typename Eval>
Best sweep_masks(std::uint64_t total, int threads, const Eval& eval) {
    if (threads <= 1 || total < 1024) {
        Best best;
        for (std::uint64_t m = 0; m < total; ++m) best.offer(eval(m), m);
        return best;
    }
    int t = std::min<std::uint64_t>(threads, 64);
    std::vector<Best> parts(t);
    std::vector<std::thread> workers;
    std::uint64_t chunk = (total + t - 1) / t;
    for (int i = 0; i < t; ++i) {
        std::uint64_t lo = chunk * i;
        std::uint64_t hi = std::min(total, lo + chunk);
        workers.emplace_back([&, i, lo, hi]() {
            for (std::uint64_t m = lo; m < hi; ++m) parts[i].offer(eval(m), m);
        });
    }
    for (auto& w : workers) w.join();
    Best best;
    for (const Best& p : parts) best.merge(p);
    return best;
}

}  // namespace

OracleResult brute_force_orient(const MixedGraph& g, const PairSet& pairs, int max_edges,
                                int threads) {
    int m = static_cast<int>(g.edges().size());
    if (m > max_edges) {
        throw PreconditionError("oracle refuses " + std::to_string(m) + " edges (cap " +
                                std::to_string(max_edges) + ")");
    }
    std::uint64_t total = 1ULL << m;
    Best best = sweep_masks(total, threads, [&](std::uint64_t mask) {
        return satisfied_count(g, Orientation::from_mask(mask, m), pairs);
    });
    return OracleResult{best.count, Orientation::from_mask(best.mask, m), total};
}

OracleResult brute_force_fixed(const FixedPathInstance& inst, int max_edges, int threads) {
    int m = static_cast<int>(inst.graph().edges().size());

    // Per edge: which direction each path wants (true = lower->higher).
    // 0 unused, 1 forward only, 2 backward only, 3 contested.
    std::vector<unsigned char> want(m, 0);
    for (const auto& steps : inst.path_edges()) {
        for (auto [e, along] : steps) want[e] |= along ? 1 : 2;
    }
    std::vector<int> contested;
    Orientation base;
    base.forward.assign(m, true);
    for (int e = 0; e < m; ++e) {
        if (want[e] == 3) {
            contested.push_back(e);
        } else if (want[e] == 2) {
            base.forward[e] = false;
        }
    }
    int c = static_cast<int>(contested.size());
    if (c > max_edges) {
        throw PreconditionError("fixed oracle refuses " + std::to_string(c) +
                                " contested edges (cap " + std::to_string(max_edges) + ")");
    }

    std::uint64_t total = 1ULL << c;
    Best best = sweep_masks(total, threads, [&](std::uint64_t mask) {
        Orientation o = base;
        for (int i = 0; i < c; ++i) o.forward[contested[i]] = ((mask >> i) & 1ULL) == 0;
        return static_cast<int>(satisfied_fixed_pairs(inst, o).size());
    });
    Orientation o = base;
    for (int i = 0; i < c; ++i) o.forward[contested[i]] = ((best.mask >> i) & 1ULL) == 0;
    return OracleResult{best.count, std::move(o), total};
}

int brute_force_max_clique(const std::vector<std::vector<bool>>& adjacency, int max_vertices) {
    int n = static_cast<int>(adjacency.size());
    if (n > max_vertices) {
        throw PreconditionError("clique oracle refuses " + std::to_string(n) + " vertices (cap " +
                                std::to_string(max_vertices) + ")");
    }
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (adjacency[v][w]) nb[v] |= (1u << w);
        }
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v) {
            if (!(s & (1u << v))) continue;
            std::uint32_t rest = s & ~(1u << v);
            if ((nb[v] & rest) != rest) clique = false;
        }
        if (clique) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

std::vector<int> brute_force_max_independent_set(const std::vector<std::vector<bool>>& adjacency,
                                                 int max_vertices) {
    int n = static_cast<int>(adjacency.size());
    if (n > max_vertices) {
        throw PreconditionError("independent-set oracle refuses " + std::to_string(n) +
                                " vertices (cap " + std::to_string(max_vertices) + ")");
    }
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (adjacency[v][w]) nb[v] |= (1u << w);
        }
    }
    int best_size = -1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool indep = true;
        for (int v = 0; v < n && indep; ++v) {
            if ((s & (1u << v)) && (nb[v] & s)) indep = false;
        }
        if (!indep) continue;
        int size = __builtin_popcount(s);
        if (size > best_size) {
            best_size = size;
            best_mask = s;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (best_mask & (1u << v)) out.push_back(v);
    }
    return out;
}

}  // namespace morient
