#pragma once

// Orbit-pair analyses: invariant pair sets, the expansivity taxonomy, stable
// and unstable sets, and the weighted sequence metric.
//
// Every notion defined on bi-infinite orbits is translated to the finite
// setting explicitly:
//   - the inverse-limit carrier is realized through the eventual image E
//     (points with arbitrarily deep preimage chains) rather than as a set of
//     sequences;
//   - "distances converge to 0 along a tail" means "the tail is eventually
//     diagonal", because a finite space has a positive minimum distance;
//   - backward branches are enumerated nondeterministically over the
//     functional graph restricted to E.
// Each checker below states which translation it uses.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findyn/chain.hpp"
#include "findyn/errors.hpp"
#include "findyn/scalar.hpp"
#include "findyn/space.hpp"

namespace findyn {

struct EventualImage {
    std::vector<int> points;  // sorted
    bool contains(int x) const { return std::binary_search(points.begin(), points.end(), x); }
};

// E = intersection of all forward images; the largest subset on which the
// map is surjective, computed by iterating the image to a fixpoint. Exactly
// the points that admit arbitrarily deep preimage chains.
inline EventualImage eventual_image(const FiniteSystem& sys) {
    const int n = sys.size();
    std::vector<char> cur(n, 1), next(n, 0);
    while (true) {
        std::fill(next.begin(), next.end(), 0);
        for (int v = 0; v < n; ++v)
            if (cur[v]) next[sys.f(v)] = 1;
        if (next == cur) break;
        cur = next;
    }
    EventualImage e;
    for (int v = 0; v < n; ++v)
        if (cur[v]) e.points.push_back(v);
    return e;
}

enum class PairKind { Forward, TwoSided, Periodic, Windowed };

// A set of point pairs within threshold c, closed under the constraints of
// its kind. Symmetric in both coordinates for every kind.
struct PairInvariantSet {
    Scalar c;
    PairKind kind;
    int window = 0;  // Windowed only
    std::vector<std::pair<int, int>> pairs;  // sorted

    bool contains(int x, int y) const {
        return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, y));
    }
    bool subset_of_diagonal() const {
        for (const auto& [x, y] : pairs)
            if (x != y) return false;
        return true;
    }
};

namespace detail {

// Pair p = x*n + y; the pair map F(x,y) = (f(x), f(y)) is functional, which
// the walks below exploit.
struct PairSpace {
    const FiniteSystem& sys;
    int n;
    explicit PairSpace(const FiniteSystem& s) : sys(s), n(s.size()) {}
    int enc(int x, int y) const { return x * n + y; }
    int step(int p) const { return sys.f(p / n) * n + sys.f(p % n); }
    bool diagonal(int p) const { return p / n == p % n; }
};

inline std::vector<char> allowed_pairs(const FiniteSystem& sys, const Scalar& c) {
    const int n = sys.size();
    std::vector<char> a(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (sys.d(x, y) <= c) a[static_cast<size_t>(x) * n + y] = 1;
    return a;
}

// Pairs whose entire deterministic forward F-orbit stays inside `allowed`.
// Memoized trajectory walk; linear in the pair space.
inline std::vector<char> forward_invariant(const PairSpace& ps, const std::vector<char>& allowed) {
    enum : char { Unknown = 0, Good = 1, Bad = 2 };
    std::vector<char> status(allowed.size(), Unknown);
    std::vector<int> path;
    for (int p0 = 0; p0 < static_cast<int>(allowed.size()); ++p0) {
        if (status[p0] != Unknown) continue;
        path.clear();
        int p = p0;
        char verdict;
        std::map<int, int> on_path;
        while (true) {
            if (!allowed[p]) {
                verdict = Bad;
                break;
            }
            if (status[p] != Unknown) {
                verdict = status[p];
                break;
            }
            auto it = on_path.find(p);
            if (it != on_path.end()) {
                verdict = Good;  // reached a cycle of allowed pairs
                break;
            }
            on_path[p] = static_cast<int>(path.size());
            path.push_back(p);
            p = ps.step(p);
        }
        for (int q : path) status[q] = verdict;
    }
    std::vector<char> out(allowed.size(), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = status[i] == Good;
    return out;
}

// Pairs lying on an F-cycle all of whose pairs are allowed.
inline std::vector<char> cycle_pairs(const PairSpace& ps, const std::vector<char>& allowed) {
    enum : char { Unknown = 0, OnCycle = 1, OffCycle = 2 };
    std::vector<char> status(allowed.size(), Unknown);
    std::vector<int> path;
    for (int p0 = 0; p0 < static_cast<int>(allowed.size()); ++p0) {
        if (status[p0] != Unknown) continue;
        path.clear();
        std::map<int, int> on_path;
        int p = p0;
        int cycle_start = -1;  // index into path where a fresh cycle begins
        while (true) {
            if (!allowed[p] || status[p] != Unknown) break;  // path drains elsewhere
            auto it = on_path.find(p);
            if (it != on_path.end()) {
                cycle_start = it->second;
                break;
            }
            on_path[p] = static_cast<int>(path.size());
            path.push_back(p);
            p = ps.step(p);
        }
        for (size_t i = 0; i < path.size(); ++i)
            status[path[i]] =
                (cycle_start >= 0 && static_cast<int>(i) >= cycle_start) ? OnCycle : OffCycle;
    }
    std::vector<char> out(allowed.size(), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = status[i] == OnCycle;
    return out;
}

// Greatest subset of `domain` in which every pair has its F-image inside and
// at least one F-preimage inside: the pairs lying on bi-infinite F-walks.
inline std::vector<char> biinfinite_core(const PairSpace& ps, std::vector<char> domain) {
    const int sz = static_cast<int>(domain.size());
    std::vector<int> pred_count(sz, 0);
    for (int p = 0; p < sz; ++p)
        if (domain[p] && domain[ps.step(p)]) ++pred_count[ps.step(p)];
    std::vector<int> queue;
    for (int p = 0; p < sz; ++p)
        if (domain[p] && (pred_count[p] == 0 || !domain[ps.step(p)])) queue.push_back(p);
    // Removing a pair can strand its successor (loses a predecessor) and its
    // predecessors (lose their image); the latter are found by rescan, which
    // is fine at these sizes.
    std::vector<std::vector<int>> preds(sz);
    for (int p = 0; p < sz; ++p)
        if (domain[p]) preds[ps.step(p)].push_back(p);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int p = queue[qi];
        if (!domain[p]) continue;
        domain[p] = 0;
        int s = ps.step(p);
        if (domain[s] && --pred_count[s] == 0) queue.push_back(s);
        for (int q : preds[p])
            if (domain[q]) queue.push_back(q);
    }
    return domain;
}

inline std::vector<std::pair<int, int>> collect_pairs(const std::vector<char>& mask, int n) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mask[static_cast<size_t>(x) * n + y]) out.emplace_back(x, y);
    return out;
}

inline std::vector<char> restrict_to(const std::vector<char>& mask, const EventualImage& e, int n) {
    std::vector<char> out(mask.size(), 0);
    for (const int x : e.points)
        for (const int y : e.points)
            out[static_cast<size_t>(x) * n + y] = mask[static_cast<size_t>(x) * n + y];
    return out;
}

}  // namespace detail

// Windowed pair set: pairs (x, y) that sit at time 0 of some pairing of true
// orbit segments over times -L..L with all 2L+1 distances <= c. Backward
// branching is resolved exactly: such a pairing exists iff some pair q at
// time -L has its first 2L forward images allowed, with F^L(q) = (x, y).
inline PairInvariantSet window_invariant_pairs(const FiniteSystem& sys, const Scalar& c, int L) {
    if (L < 0) throw parameter_error("window must be nonnegative");
    detail::PairSpace ps(sys);
    auto allowed = detail::allowed_pairs(sys, c);
    std::vector<char> hit(allowed.size(), 0);
    for (int q = 0; q < static_cast<int>(allowed.size()); ++q) {
        int p = q;
        bool ok = true;
        for (int k = 0; k < 2 * L && ok; ++k) {
            if (!allowed[p]) ok = false;
            p = ps.step(p);
        }
        if (ok && allowed[p]) {
            int mid = q;
            for (int k = 0; k < L; ++k) mid = ps.step(mid);
            hit[mid] = 1;
        }
    }
    PairInvariantSet out;
    out.c = c;
    out.kind = PairKind::Windowed;
    out.window = L;
    out.pairs = detail::collect_pairs(hit, sys.size());
    return out;
}

// Invariant pair sets at threshold c.
//   Forward:  pairs over X*X whose whole forward F-orbit stays within c.
//   TwoSided: pairs over E*E on a bi-infinite in-threshold F-walk (image in
//             the set, some preimage in the set, pruned to the fixpoint).
//   Periodic: pairs on an F-cycle that stays within c throughout.
//   Windowed: see window_invariant_pairs.
inline PairInvariantSet pair_invariant_set(const FiniteSystem& sys, const Scalar& c, PairKind kind,
                                           int window = 0) {
    if (c < Scalar(0)) throw parameter_error("threshold must be nonnegative");
    if (kind == PairKind::Windowed) return window_invariant_pairs(sys, c, window);
    detail::PairSpace ps(sys);
    auto allowed = detail::allowed_pairs(sys, c);
    std::vector<char> mask;
    switch (kind) {
        case PairKind::Forward:
            mask = detail::forward_invariant(ps, allowed);
            break;
        case PairKind::Periodic:
            mask = detail::cycle_pairs(ps, allowed);
            break;
        case PairKind::TwoSided: {
            auto domain = detail::restrict_to(allowed, eventual_image(sys), sys.size());
            mask = detail::biinfinite_core(ps, std::move(domain));
            break;
        }
        default:
            throw parameter_error("unknown pair kind");
    }
    PairInvariantSet out;
    out.c = c;
    out.kind = kind;
    out.pairs = detail::collect_pairs(mask, sys.size());
    return out;
}

// Direct check of the forward half of the bi-asymptotic criterion: every
// in-threshold forward pair over E*E has an eventually diagonal tail.
inline bool forward_orbit_pairs_merge(const FiniteSystem& sys, const Scalar& c) {
    detail::PairSpace ps(sys);
    auto domain = detail::restrict_to(detail::allowed_pairs(sys, c), eventual_image(sys),
                                      sys.size());
    auto fwd = detail::forward_invariant(ps, domain);
    const int bound = sys.size() * sys.size();
    for (int p = 0; p < static_cast<int>(fwd.size()); ++p) {
        if (!fwd[p]) continue;
        int q = p;
        for (int k = 0; k < bound && !ps.diagonal(q); ++k) q = ps.step(q);
        if (!ps.diagonal(q)) return false;
    }
    return true;
}

// Direct check of the backward half: prune in-threshold pairs over E*E to
// those with arbitrarily deep in-threshold predecessor chains, then reject
// if any off-diagonal pair in that core lies on an in-threshold F-cycle
// (such a cycle is a backward walk that stays off-diagonal forever).
inline bool backward_walk_pairs_merge(const FiniteSystem& sys, const Scalar& c) {
    detail::PairSpace ps(sys);
    const int n = sys.size();
    auto domain = detail::restrict_to(detail::allowed_pairs(sys, c), eventual_image(sys), n);
    // Keep pairs with some predecessor surviving, iterated to the fixpoint.
    std::vector<char> alive = domain;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> has_pred(alive.size(), 0);
        for (int p = 0; p < static_cast<int>(alive.size()); ++p)
            if (alive[p]) has_pred[ps.step(p)] = 1;
        for (int p = 0; p < static_cast<int>(alive.size()); ++p)
            if (alive[p] && !has_pred[p]) {
                alive[p] = 0;
                changed = true;
            }
    }
    auto cyc = detail::cycle_pairs(ps, alive);
    for (int p = 0; p < static_cast<int>(cyc.size()); ++p)
        if (cyc[p] && !ps.diagonal(p)) return false;
    return true;
}

struct ExpansivityReport {
    Scalar c;
    bool positively_expansive = false;
    bool c_expansive = false;
    bool asymptotically_expansive = false;
    bool bi_asymptotically_c_expansive = false;
    std::optional<bool> expansive;           // bijective systems only
    std::optional<bool> weak_bi_asymptotic;  // bijective systems only
    std::optional<int> n_expansive_min;      // bijective systems only
    // One concrete witness per false verdict, keyed by the verdict name:
    // a single pair, or a full pair cycle for the tail-based verdicts.
    std::map<std::string, std::vector<std::pair<int, int>>> witnesses;
};

// All expansivity verdicts at threshold c.
//
// Reduction note for the bi-asymptotic verdict. Both halves of the
// definition (forward in-threshold orbit pairs merge; backward in-threshold
// walk pairs merge) are equivalent, on a finite system, to: every F-cycle
// that stays within c is diagonal. Forward: an in-threshold forward pair
// tail ends in an in-threshold pair cycle, and a non-diagonal cycle never
// merges (the diagonal is F-invariant, so a cycle touching it is entirely
// diagonal); conversely an off-diagonal in-threshold cycle is itself a
// non-merging forward pair. Backward: a backward in-threshold walk that is
// off-diagonal infinitely often revisits some off-diagonal pair, exhibiting
// an off-diagonal in-threshold cycle; conversely such a cycle, traversed
// forever, is a non-merging backward walk. Cycle pairs are periodic in each
// coordinate, hence automatically inside E*E. The reduction is cross-checked
// here against both direct analyses on every call.
inline ExpansivityReport classify_expansivity(const FiniteSystem& sys, const Scalar& c) {
    if (c < Scalar(0)) throw parameter_error("threshold must be nonnegative");
    detail::PairSpace ps(sys);
    const int n = sys.size();
    ExpansivityReport rep;
    rep.c = c;

    auto fwd = pair_invariant_set(sys, c, PairKind::Forward);
    rep.positively_expansive = fwd.subset_of_diagonal();
    if (!rep.positively_expansive)
        for (const auto& pr : fwd.pairs)
            if (pr.first != pr.second) {
                rep.witnesses["positively_expansive"] = {pr};
                break;
            }

    auto two = pair_invariant_set(sys, c, PairKind::TwoSided);
    rep.c_expansive = two.subset_of_diagonal();
    if (!rep.c_expansive)
        for (const auto& pr : two.pairs)
            if (pr.first != pr.second) {
                rep.witnesses["c_expansive"] = {pr};
                break;
            }

    // Asymptotic expansivity: every forward pair's eventual F-cycle is
    // diagonal; the witness is the first off-diagonal cycle reached.
    rep.asymptotically_expansive = true;
    const int bound = n * n;
    for (const auto& [x, y] : fwd.pairs) {
        int q = ps.enc(x, y);
        for (int k = 0; k < bound && !ps.diagonal(q); ++k) q = ps.step(q);
        if (!ps.diagonal(q)) {
            rep.asymptotically_expansive = false;
            std::vector<std::pair<int, int>> cycle;
            int r = q;
            do {
                cycle.emplace_back(r / n, r % n);
                r = ps.step(r);
            } while (r != q);
            rep.witnesses["asymptotically_expansive"] = cycle;
            break;
        }
    }

    auto periodic = pair_invariant_set(sys, c, PairKind::Periodic);
    rep.bi_asymptotically_c_expansive = periodic.subset_of_diagonal();
    if (!rep.bi_asymptotically_c_expansive)
        for (const auto& [x, y] : periodic.pairs)
            if (x != y) {
                std::vector<std::pair<int, int>> cycle;
                int q = ps.enc(x, y), r = q;
                do {
                    cycle.emplace_back(r / n, r % n);
                    r = ps.step(r);
                } while (r != q);
                rep.witnesses["bi_asymptotically_c_expansive"] = cycle;
                break;
            }
    // Cross-check of the reduction against the direct clause analyses.
    bool direct = forward_orbit_pairs_merge(sys, c) && backward_walk_pairs_merge(sys, c);
    if (direct != rep.bi_asymptotically_c_expansive)
        throw error("internal invariant broken: bi-asymptotic reduction disagrees with direct analysis");

    if (sys.bijective) {
        rep.expansive = rep.c_expansive;  // recalled equivalence for invertible maps
        if (!rep.c_expansive) rep.witnesses["expansive"] = rep.witnesses["c_expansive"];
        // Weak variant: both deterministic tails of every two-sided pair are
        // eventually diagonal. Inverse tails exist because f is a bijection.
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[sys.f(i)] = i;
        rep.weak_bi_asymptotic = true;
        for (const auto& [x, y] : two.pairs) {
            int fx = x, fy = y, bx = x, by = y;
            bool fwd_merge = false, bwd_merge = false;
            for (int k = 0; k <= bound; ++k) {
                fwd_merge |= fx == fy;
                bwd_merge |= bx == by;
                fx = sys.f(fx);
                fy = sys.f(fy);
                bx = inv[bx];
                by = inv[by];
            }
            if (!(fwd_merge && bwd_merge)) {
                rep.weak_bi_asymptotic = false;
                rep.witnesses["weak_bi_asymptotic"] = {{x, y}};
                break;
            }
        }
        int worst = 0;
        for (int x = 0; x < n; ++x) {
            int row = 0;
            for (int y = 0; y < n; ++y)
                if (two.contains(x, y)) ++row;
            worst = std::max(worst, row);
        }
        rep.n_expansive_min = worst;
    }
    return rep;
}

// Gamma set of x: all y whose two-sided in-threshold pairing with x exists.
// Needs bijectivity, where the two-sided walk through (x, y) is unique.
inline std::vector<int> gamma_set(const FiniteSystem& sys, int x, const Scalar& c) {
    if (!sys.bijective) throw capability_error("gamma sets need a bijective map");
    if (x < 0 || x >= sys.size()) throw input_error("point index out of range");
    auto two = pair_invariant_set(sys, c, PairKind::TwoSided);
    std::vector<int> out;
    for (int y = 0; y < sys.size(); ++y)
        if (two.contains(x, y)) out.push_back(y);
    return out;
}

// max_x |Gamma_c(x)| <= N.
inline bool check_N_expansive(const FiniteSystem& sys, const Scalar& c, int N) {
    if (!sys.bijective) throw capability_error("N-expansivity needs a bijective map");
    if (N < 1) throw parameter_error("N must be positive");
    auto two = pair_invariant_set(sys, c, PairKind::TwoSided);
    std::vector<int> row(sys.size(), 0);
    for (const auto& pr : two.pairs) ++row[pr.first];
    return *std::max_element(row.begin(), row.end()) <= N;
}

// Global stable set: points whose forward orbit merges with x's. On a finite
// system a merge, if it ever happens, happens within |X|^2 steps (the pair
// trajectory repeats by then without touching the diagonal otherwise).
inline std::vector<int> stable_set(const FiniteSystem& sys, int x) {
    if (x < 0 || x >= sys.size()) throw input_error("point index out of range");
    const int bound = sys.size() * sys.size();
    std::vector<int> out;
    for (int y = 0; y < sys.size(); ++y) {
        int a = x, b = y;
        for (int k = 0; k <= bound; ++k) {
            if (a == b) {
                out.push_back(y);
                break;
            }
            a = sys.f(a);
            b = sys.f(b);
        }
    }
    return out;
}

// Local stable set of size alpha: the x-row of the forward pair set.
inline std::vector<int> local_stable_set(const FiniteSystem& sys, int x, const Scalar& alpha) {
    if (x < 0 || x >= sys.size()) throw input_error("point index out of range");
    auto fwd = pair_invariant_set(sys, alpha, PairKind::Forward);
    std::vector<int> out;
    for (int y = 0; y < sys.size(); ++y)
        if (fwd.contains(x, y)) out.push_back(y);
    return out;
}

namespace detail {

inline void require_backward_branch(const FiniteSystem& sys, const OrbitSegment& branch,
                                    const EventualImage& e) {
    if (branch.time_max() != 0)
        throw precondition_error("backward branch must end at time 0");
    for (size_t t = 0; t + 1 < branch.points.size(); ++t)
        if (sys.f(branch.points[t]) != branch.points[t + 1])
            throw precondition_error("backward branch breaks at position " + std::to_string(t));
    for (int p : branch.points)
        if (!e.contains(p))
            throw precondition_error("backward branch leaves the eventual image at '" +
                                     sys.space.labels[p] + "'");
}

}  // namespace detail

// Local unstable set along a concrete backward branch x_0, x_-1, ..., x_-L:
// all y_0 admitting a backward branch inside E with d(x_-t, y_-t) <= alpha
// for every 0 <= t <= L. Branches are enumerated by stepping the functional
// graph forward from depth L.
inline std::vector<int> local_unstable_set(const FiniteSystem& sys, const OrbitSegment& branch,
                                           const Scalar& alpha) {
    auto e = eventual_image(sys);
    detail::require_backward_branch(sys, branch, e);
    const int L = -branch.time_min();
    std::vector<char> cur(sys.size(), 0);
    for (int y : e.points)
        if (sys.d(branch.at_time(-L), y) <= alpha) cur[y] = 1;
    for (int t = L - 1; t >= 0; --t) {
        std::vector<char> next(sys.size(), 0);
        for (int y = 0; y < sys.size(); ++y)
            if (cur[y] && e.contains(sys.f(y)) && sys.d(branch.at_time(-t), sys.f(y)) <= alpha)
                next[sys.f(y)] = 1;
        cur = std::move(next);
    }
    std::vector<int> out;
    for (int y = 0; y < sys.size(); ++y)
        if (cur[y]) out.push_back(y);
    return out;
}

// Global unstable set along a backward branch. On a finite discrete system
// "backward distances converge to 0" forces eventual equality of branches,
// and forward determinism then propagates equality to time 0; the set is
// exactly {x_0}. The branch is still validated in full.
inline std::vector<int> unstable_set(const FiniteSystem& sys, const OrbitSegment& branch) {
    detail::require_backward_branch(sys, branch, eventual_image(sys));
    return {branch.at_time(0)};
}

struct HeteroclinicWitness {
    int point;                // z, backward-asymptotic to the branch, forward-asymptotic to y
    int backward_merge_depth;  // depth at which z's branch coincides with the given branch
    int forward_merge_step;    // least k with f^k(z) = f^k(y)
};

// Intersection search W^u(branch) and W^s(y): a point z whose backward
// branch merges into the given branch of p and whose forward orbit merges
// with y's. Discretely, backward merging plus forward determinism pins
// z = p (depth 0), so the content is the forward merge with y.
inline std::optional<HeteroclinicWitness> heteroclinic_check(const FiniteSystem& sys, int p,
                                                             const OrbitSegment& branch, int y,
                                                             const Scalar& delta) {
    if (p < 0 || p >= sys.size() || y < 0 || y >= sys.size())
        throw input_error("point index out of range");
    detail::require_backward_branch(sys, branch, eventual_image(sys));
    if (branch.at_time(0) != p) throw precondition_error("branch does not end at p");
    if (!(sys.d(p, y) <= delta))
        throw precondition_error("d(p, y) exceeds delta");
    const int bound = sys.size() * sys.size();
    int a = p, b = y;
    for (int k = 0; k <= bound; ++k) {
        if (a == b) return HeteroclinicWitness{p, 0, k};
        a = sys.f(a);
        b = sys.f(b);
    }
    return std::nullopt;
}

struct WindowedDistance {
    Scalar value;       // sum over |t| <= W of d(a_t, b_t) / 2^|t|
    Scalar tail_bound;  // diam(X) * 2^(1-W), bounding the omitted tail
};

// Weighted sequence distance between two orbit segments, truncated to the
// window |t| <= W. Both segments must cover the window. The tail bound is
// what the omitted terms could contribute at most for full orbits.
inline WindowedDistance windowed_sequence_metric(const FiniteSystem& sys, const OrbitSegment& a,
                                                 const OrbitSegment& b, int W) {
    if (W < 0 || W > 60) throw parameter_error("window must be in [0, 60]");
    if (a.time_min() > -W || a.time_max() < W || b.time_min() > -W || b.time_max() < W)
        throw precondition_error("segments must cover times -W..W");
    Scalar value(0);
    for (int t = -W; t <= W; ++t) {
        Scalar weight(Rational(1, 1LL << (t < 0 ? -t : t)));
        value = value + sys.d(a.at_time(t), b.at_time(t)) * weight;
    }
    Scalar tail = diameter(sys.space) * Scalar(Rational(2, 1LL << W));
    return {value, tail};
}

}  // namespace findyn
