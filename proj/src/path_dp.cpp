#include "morient/path_dp.hpp"

#include <algorithm>
#include <string>

namespace morient {

namespace {

// connection between consecutive path positions
struct Conn {
    int edge = -1;  // index into edges(), or -1 for an arc
    int arc_dir = 0;  // +1 arc points right (toward higher positions), -1 left, 0 edge
};

struct PathShape {
    std::vector<int> order;  // position -> vertex
    std::vector<int> pos;    // vertex -> position
    std::vector<Conn> conn;  // size n-1
};

PathShape path_shape(const MixedGraph& g) {
    auto order = underlying_path_order(g);
    if (!order) throw PreconditionError("input is not a path");
    PathShape sh;
    sh.order = *order;
    int n = g.vertex_count();
    sh.pos.assign(n, -1);
    for (int i = 0; i < n; ++i) sh.pos[sh.order[i]] = i;
    sh.conn.resize(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) {
        int a = sh.order[i], b = sh.order[i + 1];
        if (auto e = g.edge_index(a, b)) {
            sh.conn[i] = {*e, 0};
        } else {
            for (const auto& l : g.links()[a]) {
                if (l.to == b && l.arc >= 0) {
                    const Arc& arc = g.arcs()[l.arc];
                    sh.conn[i] = {-1, arc.tail == a ? +1 : -1};
                }
            }
        }
    }
    return sh;
}

enum Branch : unsigned char { kNone, kExtend, kSplit };

}  // namespace

int count_forward(const MixedGraph& path, int from, int to, const PairSet& pairs) {
    PathShape sh = path_shape(path);
    int n = path.vertex_count();
    if (from < 0 || from >= n || to < 0 || to >= n) {
        throw ValidationError("count_forward endpoints out of range");
    }
    int pf = sh.pos[from], pt = sh.pos[to];
    int lo = std::min(pf, pt), hi = std::max(pf, pt);
    bool rightward = pf <= pt;
    for (int i = lo; i < hi; ++i) {
        int d = sh.conn[i].arc_dir;
        if ((rightward && d == -1) || (!rightward && d == +1)) return 0;
    }
    int count = 0;
    for (const Pair& p : pairs) {
        int ps = sh.pos[p.s], pt2 = sh.pos[p.t];
        if (ps < lo || ps > hi || pt2 < lo || pt2 > hi) continue;
        if (rightward ? ps < pt2 : ps > pt2) ++count;
    }
    return count;
}

SolveResult solve_mixed_path(const MixedGraph& g, const PairSet& pairs) {
    PathShape sh = path_shape(g);
    int n = g.vertex_count();
    for (const Pair& p : pairs) {
        if (p.s < 0 || p.s >= n || p.t < 0 || p.t >= n) {
            throw ValidationError("pair endpoint out of range");
        }
    }

    int trivial = 0;
    std::vector<std::pair<int, int>> pp;  // (pos s, pos t), s != t
    for (const Pair& p : pairs) {
        if (p.s == p.t) {
            ++trivial;
        } else {
            pp.emplace_back(sh.pos[p.s], sh.pos[p.t]);
        }
    }

    Orientation witness;
    witness.forward.assign(g.edges().size(), true);
    if (n <= 1) return {trivial, witness};

    auto idx = [n](int lo, int hi) { return lo * n + hi; };

    // pair counts per closed interval, split by direction
    std::vector<int> cntR(n * n, 0), cntL(n * n, 0);
    {
        std::vector<std::vector<int>> tgt_at(n), src_at(n);
        for (auto [ps, pt] : pp) {
            if (ps < pt) {
                tgt_at[pt].push_back(ps);  // rightward pair ending at pt
            } else {
                src_at[ps].push_back(pt);  // leftward pair starting at ps
            }
        }
        for (int lo = 0; lo < n; ++lo) {
            for (int hi = lo + 1; hi < n; ++hi) {
                int addR = 0, addL = 0;
                for (int s : tgt_at[hi]) {
                    if (s >= lo) ++addR;
                }
                for (int t : src_at[hi]) {
                    if (t >= lo) ++addL;
                }
                cntR[idx(lo, hi)] = cntR[idx(lo, hi - 1)] + addR;
                cntL[idx(lo, hi)] = cntL[idx(lo, hi - 1)] + addL;
            }
        }
    }

    // arc feasibility per interval
    std::vector<char> okR(n * n, 1), okL(n * n, 1);
    for (int lo = 0; lo < n; ++lo) {
        for (int hi = lo + 1; hi < n; ++hi) {
            int d = sh.conn[hi - 1].arc_dir;
            okR[idx(lo, hi)] = okR[idx(lo, hi - 1)] && d != -1;
            okL[idx(lo, hi)] = okL[idx(lo, hi - 1)] && d != +1;
        }
    }
    auto AR = [&](int lo, int hi) { return okR[idx(lo, hi)] ? cntR[idx(lo, hi)] : 0; };
    auto AL = [&](int lo, int hi) { return okL[idx(lo, hi)] ? cntL[idx(lo, hi)] : 0; };

    std::vector<int> SR(n * n, 0), SL(n * n, 0);
    std::vector<Branch> chR(n * n, kNone), chL(n * n, kNone);
    for (int hi = n - 1; hi >= 1; --hi) {
        for (int lo = hi - 1; lo >= 0; --lo) {
            if (hi == n - 1) {
                SR[idx(lo, hi)] = AR(lo, hi);
                SL[idx(lo, hi)] = AL(lo, hi);
                continue;
            }
            int u = hi + 1;
            int d = sh.conn[hi].arc_dir;  // connection hi..u
            {
                // run [lo..hi] rightward
                int best = -1;
                Branch br = kNone;
                if (d != -1) {  // extend rightward across hi..u
                    int v = SR[idx(lo, u)] - AR(lo, hi);
                    if (v > best) best = v, br = kExtend;
                }
                if (d != +1) {  // split at hi: edge u..hi flows back into hi
                    int v = SL[idx(hi, u)];
                    if (v > best) best = v, br = kSplit;
                }
                SR[idx(lo, hi)] = AR(lo, hi) + best;
                chR[idx(lo, hi)] = br;
            }
            {
                // run [lo..hi] leftward
                int best = -1;
                Branch br = kNone;
                if (d != +1) {
                    int v = SL[idx(lo, u)] - AL(lo, hi);
                    if (v > best) best = v, br = kExtend;
                }
                if (d != -1) {  // split at hi: hi becomes a source
                    int v = SR[idx(hi, u)];
                    if (v > best) best = v, br = kSplit;
                }
                SL[idx(lo, hi)] = AL(lo, hi) + best;
                chL[idx(lo, hi)] = br;
            }
        }
    }

    // root: first connection may take either direction unless it is an arc
    int d0 = sh.conn[0].arc_dir;
    int best = -1;
    bool start_right = true;
    if (d0 != -1 && SR[idx(0, 1)] > best) {
        best = SR[idx(0, 1)];
        start_right = true;
    }
    if (d0 != +1 && SL[idx(0, 1)] > best) {
        best = SL[idx(0, 1)];
        start_right = false;
    }

    // traceback
    auto finalize = [&](int lo, int hi, bool rightward) {
        for (int i = lo; i < hi; ++i) {
            if (sh.conn[i].edge < 0) continue;
            int e = sh.conn[i].edge;
            bool fwd = g.edges()[e].u == sh.order[rightward ? i : i + 1];
            witness.forward[e] = fwd;
        }
    };
    int lo = 0, hi = 1;
    bool dir_right = start_right;
    while (true) {
        if (hi == n - 1) {
            finalize(lo, hi, dir_right);
            break;
        }
        Branch br = dir_right ? chR[idx(lo, hi)] : chL[idx(lo, hi)];
        if (br == kExtend) {
            hi = hi + 1;
        } else {
            finalize(lo, hi, dir_right);
            lo = hi;
            hi = hi + 1;
            dir_right = !dir_right;
        }
    }

    return {best + trivial, witness};
}

}  // namespace morient
