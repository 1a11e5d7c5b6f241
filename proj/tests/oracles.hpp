// Independent reference implementations used only by the test suite.
//
// Each oracle recomputes a library result through a deliberately different
// mechanism (brute-force enumeration, matrix closure, bounded walks) so that
// agreement between the two is meaningful evidence of correctness.
#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "findyn/findyn.hpp"

namespace oracles {

using findyn::FiniteSystem;
using findyn::Scalar;

// ---------------------------------------------------------------------------
// Chain recurrence via boolean-matrix closure.
//
// reach[x][y] holds iff there is an epsilon-chain of length >= 1 from x to y.
// Built as A | A^2 | ... | A^n (path lengths beyond n add nothing new for
// recurrence/mutual-reach questions on n vertices).
// ---------------------------------------------------------------------------
inline std::vector<std::vector<bool>> chain_reach_oracle(const FiniteSystem& sys,
                                                         const Scalar& eps) {
    const int n = sys.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) adj[x][y] = sys.d(sys.f(x), y) <= eps;
    std::vector<std::vector<bool>> reach = adj;
    for (int step = 1; step < n; ++step) {
        std::vector<std::vector<bool>> next = reach;
        for (int x = 0; x < n; ++x)
            for (int m = 0; m < n; ++m)
                if (reach[x][m])
                    for (int y = 0; y < n; ++y)
                        if (adj[m][y]) next[x][y] = true;
        reach.swap(next);
    }
    return reach;
}

inline std::vector<int> chain_recurrent_oracle(const FiniteSystem& sys, const Scalar& eps) {
    auto reach = chain_reach_oracle(sys, eps);
    std::vector<int> out;
    for (int x = 0; x < sys.size(); ++x)
        if (reach[x][x]) out.push_back(x);
    return out;
}

// Mutual-reach equivalence classes restricted to recurrent points, each class
// sorted, classes ordered by smallest member.
inline std::vector<std::vector<int>> basic_sets_oracle(const FiniteSystem& sys,
                                                       const Scalar& eps) {
    auto reach = chain_reach_oracle(sys, eps);
    const int n = sys.size();
    std::vector<bool> used(n, false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (used[x] || !reach[x][x]) continue;
        std::vector<int> cls;
        for (int y = x; y < n; ++y) {
            if (used[y] || !reach[y][y]) continue;
            bool same = (x == y) || (reach[x][y] && reach[y][x]);
            if (same) {
                cls.push_back(y);
                used[y] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Two-sided close-pair set via explicit bounded enumeration.
//
// A pair p = (x, y) admits a bi-infinite in-threshold trajectory pair iff
//   (a) its forward orbit stays in-threshold (checking n^2 + 1 steps covers
//       every state the orbit ever visits, since the pair trajectory repeats
//       within n^2 steps), and
//   (b) some in-threshold pair r lying on an in-threshold cycle reaches p by
//       an in-threshold path of length <= n^2 (any infinite backward chain in
//       a finite pair space must revisit a pair, producing such a cycle).
// The enumeration below implements exactly that characterisation with plain
// loops, sharing nothing with the library's pruning fixpoint.
// ---------------------------------------------------------------------------
struct PairEnum {
    int n = 0;
    std::vector<bool> allowed;  // n*n, d(x,y) <= c
    std::vector<int> step;      // pair index -> image pair index

    int id(int x, int y) const { return x * n + y; }
};

inline PairEnum make_pair_enum(const FiniteSystem& sys, const Scalar& c) {
    PairEnum pe;
    pe.n = sys.size();
    pe.allowed.assign(static_cast<size_t>(pe.n) * pe.n, false);
    pe.step.assign(static_cast<size_t>(pe.n) * pe.n, 0);
    for (int x = 0; x < pe.n; ++x)
        for (int y = 0; y < pe.n; ++y) {
            pe.allowed[pe.id(x, y)] = sys.d(x, y) <= c;
            pe.step[pe.id(x, y)] = pe.id(sys.f(x), sys.f(y));
        }
    return pe;
}

inline bool forward_ok_oracle(const PairEnum& pe, int p) {
    const int bound = pe.n * pe.n + 1;
    int cur = p;
    for (int k = 0; k < bound; ++k) {
        if (!pe.allowed[cur]) return false;
        cur = pe.step[cur];
    }
    return true;
}

inline bool on_allowed_cycle_oracle(const PairEnum& pe, int r) {
    if (!pe.allowed[r]) return false;
    int cur = r;
    const int bound = pe.n * pe.n;
    for (int m = 1; m <= bound; ++m) {
        if (!pe.allowed[cur]) return false;
        cur = pe.step[cur];
        if (cur == r) return true;
    }
    return false;
}

inline std::set<std::pair<int, int>> two_sided_pairs_oracle(const FiniteSystem& sys,
                                                            const Scalar& c) {
    PairEnum pe = make_pair_enum(sys, c);
    const int np = pe.n * pe.n;

    std::vector<bool> cyc(np, false);
    for (int r = 0; r < np; ++r) cyc[r] = on_allowed_cycle_oracle(pe, r);

    // Backward-viable: reachable from a cycle pair along an in-threshold path.
    std::vector<bool> back(np, false);
    for (int r = 0; r < np; ++r) {
        if (!cyc[r]) continue;
        int cur = r;
        for (int j = 0; j <= np; ++j) {
            if (!pe.allowed[cur]) break;
            back[cur] = true;
            cur = pe.step[cur];
        }
    }

    std::set<std::pair<int, int>> out;
    for (int x = 0; x < pe.n; ++x)
        for (int y = 0; y < pe.n; ++y) {
            int p = pe.id(x, y);
            if (back[p] && forward_ok_oracle(pe, p)) out.emplace(x, y);
        }
    return out;
}

// Forward-only close-pair set: orbit stays in-threshold forever.
inline std::set<std::pair<int, int>> forward_pairs_oracle(const FiniteSystem& sys,
                                                          const Scalar& c) {
    PairEnum pe = make_pair_enum(sys, c);
    std::set<std::pair<int, int>> out;
    for (int x = 0; x < pe.n; ++x)
        for (int y = 0; y < pe.n; ++y)
            if (forward_ok_oracle(pe, pe.id(x, y))) out.emplace(x, y);
    return out;
}

// ---------------------------------------------------------------------------
// Helpers shared by tests.
// ---------------------------------------------------------------------------
inline std::set<std::pair<int, int>> as_pair_set(const std::vector<std::pair<int, int>>& v) {
    return {v.begin(), v.end()};
}

// Value at a fractional position through the sorted distinct nonzero
// distances (frac in [0,1]; 0 -> smallest, 1 -> largest).
inline Scalar distance_quantile(const FiniteSystem& sys, double frac) {
    std::vector<Scalar> vals = findyn::distance_values(sys.space);
    // Drop the leading zero so quantiles range over real separations.
    if (!vals.empty() && vals.front() == Scalar(0)) vals.erase(vals.begin());
    if (vals.empty()) return Scalar(0);
    auto idx = static_cast<size_t>(frac * static_cast<double>(vals.size() - 1) + 0.5);
    if (idx >= vals.size()) idx = vals.size() - 1;
    return vals[idx];
}

}  // namespace oracles
