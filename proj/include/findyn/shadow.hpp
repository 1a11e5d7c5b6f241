#pragma once

// Pseudo-orbits and shadowing. A delta-pseudo-orbit is a point sequence with
// d(f(x_t), x_{t+1}) <= delta at every step; a tracer is a true orbit staying
// pointwise within epsilon of it. The exact forward checker decides the
// universally quantified statement "every infinite delta-pseudo-orbit is
// epsilon-traced" by a subset construction over (current pseudo-orbit vertex,
// feasible tracer positions); emptiness of the feasible set is reachable iff
// some finite pseudo-orbit prefix has no tracer, and finite prefixes decide
// the infinite statement on a finite space.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "findyn/errors.hpp"
#include "findyn/scalar.hpp"
#include "findyn/space.hpp"

namespace findyn {

struct PseudoOrbit {
    std::vector<int> points;
    Scalar delta;
    bool periodic = false;  // when set, the step from back() to front() counts
};

struct PseudoOrbitCheck {
    bool ok;
    int first_violation;  // step index t of the first broken step, -1 if ok
};

inline PseudoOrbitCheck is_pseudo_orbit(const FiniteSystem& sys, const std::vector<int>& points,
                                        const Scalar& delta, bool periodic = false) {
    if (points.empty()) throw parameter_error("empty pseudo-orbit");
    for (int p : points)
        if (p < 0 || p >= sys.size()) throw input_error("pseudo-orbit index out of range");
    const int steps = static_cast<int>(points.size()) - (periodic ? 0 : 1);
    for (int t = 0; t < steps; ++t) {
        int next = points[(t + 1) % points.size()];
        if (!(sys.d(sys.f(points[t]), next) <= delta)) return {false, t};
    }
    return {true, -1};
}

inline PseudoOrbit make_pseudo_orbit(const FiniteSystem& sys, std::vector<int> points,
                                     const Scalar& delta, bool periodic = false) {
    auto check = is_pseudo_orbit(sys, points, delta, periodic);
    if (!check.ok)
        throw precondition_error("not a pseudo-orbit: step " +
                                 std::to_string(check.first_violation) + " exceeds delta");
    return PseudoOrbit{std::move(points), delta, periodic};
}

// All starting points whose true orbit stays within epsilon of the finite
// (non-periodic) pseudo-orbit, position by position.
inline std::vector<int> check_finite_tracing(const FiniteSystem& sys, const PseudoOrbit& pseudo,
                                             const Scalar& epsilon) {
    if (pseudo.periodic)
        throw parameter_error("finite tracing takes a non-periodic pseudo-orbit");
    std::vector<int> out;
    for (int y = 0; y < sys.size(); ++y) {
        int z = y;
        bool ok = true;
        for (int p : pseudo.points) {
            if (!(sys.d(z, p) <= epsilon)) {
                ok = false;
                break;
            }
            z = sys.f(z);
        }
        if (ok) out.push_back(y);
    }
    return out;
}

struct ForwardShadowingResult {
    bool holds;
    // When holds is false: a concrete delta-pseudo-orbit with no epsilon
    // tracer. Empty otherwise.
    std::vector<int> counterexample;
};

// Decides whether every delta-pseudo-orbit is epsilon-traced. States are
// (pseudo-orbit head v, set T of feasible tracer positions after the prefix);
// the transition to a successor w keeps the images of T that stay within
// epsilon of w. Shadowing fails iff T can be driven empty. The state space is
// bounded by |X| * 2^|X|, memoized exactly; |X| > 20 is refused.
inline ForwardShadowingResult check_forward_shadowing_exact(const FiniteSystem& sys,
                                                            const Scalar& delta,
                                                            const Scalar& epsilon) {
    const int n = sys.size();
    if (n > 20) throw budget_error("subset construction capped at |X| = 20");
    if (delta < Scalar(0) || epsilon < Scalar(0))
        throw parameter_error("delta and epsilon must be nonnegative");

    std::vector<std::vector<int>> dsucc(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sys.d(sys.f(v), w) <= delta) dsucc[v].push_back(w);

    struct State {
        int v;
        std::uint32_t mask;
        int parent;
    };
    std::vector<State> states;
    std::unordered_set<std::uint64_t> seen;
    auto key = [](int v, std::uint32_t mask) {
        return (static_cast<std::uint64_t>(mask) << 5) | static_cast<std::uint64_t>(v);
    };
    for (int v = 0; v < n; ++v) {
        std::uint32_t mask = 0;
        for (int y = 0; y < n; ++y)
            if (sys.d(y, v) <= epsilon) mask |= (1u << y);
        if (seen.insert(key(v, mask)).second) states.push_back({v, mask, -1});
    }
    for (size_t si = 0; si < states.size(); ++si) {
        State st = states[si];
        for (int w : dsucc[st.v]) {
            std::uint32_t next = 0;
            for (int y = 0; y < n; ++y)
                if ((st.mask >> y) & 1u) {
                    int fy = sys.f(y);
                    if (sys.d(fy, w) <= epsilon) next |= (1u << fy);
                }
            if (next == 0) {
                // Reconstruct the failing pseudo-orbit prefix.
                std::vector<int> path{w};
                for (int i = static_cast<int>(si); i != -1; i = states[i].parent)
                    path.push_back(states[i].v);
                std::reverse(path.begin(), path.end());
                return {false, std::move(path)};
            }
            if (seen.insert(key(w, next)).second)
                states.push_back({w, next, static_cast<int>(si)});
        }
    }
    return {true, {}};
}

// Decides whether some bi-infinite true orbit stays pointwise within epsilon
// of the periodic extension of the pseudo-orbit. Product of the cyclic
// position automaton with the functional graph on the eventual image, pruned
// to the subgraph where every node has a successor and a predecessor; a
// nonempty core is exactly the existence of a bi-infinite walk.
inline bool check_periodic_biinfinite_tracing(const FiniteSystem& sys, const PseudoOrbit& pseudo,
                                              const Scalar& epsilon) {
    if (!pseudo.periodic)
        throw parameter_error("bi-infinite tracing takes a periodic pseudo-orbit");
    const int L = static_cast<int>(pseudo.points.size());
    const int n = sys.size();
    std::vector<char> in_image(n, 0);
    {
        std::vector<char> cur(n, 1), next(n, 0);
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (int v = 0; v < n; ++v)
                if (cur[v]) next[sys.f(v)] = 1;
            if (next == cur) break;
            cur = next;
        }
        in_image = cur;
    }
    auto node = [&](int t, int y) { return t * n + y; };
    std::vector<char> alive(static_cast<size_t>(L) * n, 0);
    for (int t = 0; t < L; ++t)
        for (int y = 0; y < n; ++y)
            if (in_image[y] && sys.d(pseudo.points[t], y) <= epsilon) alive[node(t, y)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> has_pred(alive.size(), 0);
        for (int t = 0; t < L; ++t)
            for (int y = 0; y < n; ++y)
                if (alive[node(t, y)] && alive[node((t + 1) % L, sys.f(y))])
                    has_pred[node((t + 1) % L, sys.f(y))] = 1;
        for (int t = 0; t < L; ++t)
            for (int y = 0; y < n; ++y) {
                int id = node(t, y);
                if (!alive[id]) continue;
                bool has_succ = alive[node((t + 1) % L, sys.f(y))];
                if (!has_succ || !has_pred[id]) {
                    alive[id] = 0;
                    changed = true;
                }
            }
    }
    return std::any_of(alive.begin(), alive.end(), [](char a) { return a != 0; });
}

// All delta-pseudo-orbits with exactly `length` points, in lexicographic
// order. The count is bounded by `budget`; exceeding it raises rather than
// truncating.
inline std::vector<std::vector<int>> enumerate_pseudo_orbits(const FiniteSystem& sys,
                                                             const Scalar& delta, int length,
                                                             std::size_t budget = 1000000) {
    if (length < 1) throw parameter_error("length must be positive");
    if (delta < Scalar(0)) throw parameter_error("delta must be nonnegative");
    const int n = sys.size();
    std::vector<std::vector<int>> dsucc(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sys.d(sys.f(v), w) <= delta) dsucc[v].push_back(w);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (static_cast<int>(cur.size()) == length) {
            if (out.size() >= budget) throw budget_error("pseudo-orbit enumeration budget exceeded");
            out.push_back(cur);
        } else {
            for (int w : dsucc[v]) self(self, w);
        }
        cur.pop_back();
    };
    for (int v = 0; v < n; ++v) extend(extend, v);
    return out;
}

}  // namespace findyn
