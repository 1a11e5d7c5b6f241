#pragma once

// Chain recurrence and spectral-style decomposition on finite systems.
//
// For a threshold epsilon >= 0 the epsilon-chain graph has an edge x -> y iff
// d(f(x), y) <= epsilon. Chain recurrence, basic sets, cyclic structure and
// mixing are all read off this graph:
//   - x is chain recurrent iff it lies on a directed cycle;
//   - basic sets are the cycle-carrying strongly connected components;
//   - the cyclic period m of a basic set is the gcd of its cycle lengths;
//   - a component is mixing iff the chain graph of f^m on it is primitive.
// At epsilon = 0 the chain graph is the functional graph, so every notion
// collapses to its exact discrete meaning (chain recurrent = periodic, basic
// set = periodic orbit, transitive = single orbit, mixing component = fixed
// point of f^m). At epsilon > 0 transitivity and mixing are reported as chain
// surrogates and labeled as such.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "findyn/errors.hpp"
#include "findyn/scalar.hpp"
#include "findyn/space.hpp"

namespace findyn {

struct ChainGraph {
    Scalar epsilon;
    std::vector<std::vector<int>> succ;  // sorted successor lists

    int size() const { return static_cast<int>(succ.size()); }
    bool has_edge(int x, int y) const {
        return std::binary_search(succ[x].begin(), succ[x].end(), y);
    }
};

inline ChainGraph build_chain_graph(const FiniteSystem& sys, const Scalar& epsilon) {
    if (epsilon < Scalar(0)) throw parameter_error("epsilon must be nonnegative");
    ChainGraph g;
    g.epsilon = epsilon;
    g.succ.assign(sys.size(), {});
    for (int x = 0; x < sys.size(); ++x)
        for (int y = 0; y < sys.size(); ++y)
            if (sys.d(sys.f(x), y) <= epsilon) g.succ[x].push_back(y);
    return g;
}

namespace detail {

// Tarjan strongly connected components over an arbitrary successor relation.
// Returns component ids; ids are renumbered so that listing vertices in
// index order lists components by their smallest member.
inline std::vector<int> scc_ids(const std::vector<std::vector<int>>& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    // Iterative DFS: frames carry the vertex and the position in its list.
    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            if (fr.child < succ[fr.v].size()) {
                int w = succ[fr.v][fr.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
            } else {
                if (low[fr.v] == index[fr.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if (w == fr.v) break;
                    }
                    ++next_comp;
                }
                int v = fr.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    // Renumber by smallest member for deterministic output order.
    std::vector<int> first(next_comp, n), order(next_comp);
    for (int v = n - 1; v >= 0; --v) first[comp[v]] = v;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
    std::vector<int> rank(next_comp);
    for (int i = 0; i < next_comp; ++i) rank[order[i]] = i;
    for (int v = 0; v < n; ++v) comp[v] = rank[comp[v]];
    return comp;
}

// Induced successor lists on a vertex subset, relabeled 0..|subset|-1 in the
// subset's order.
inline std::vector<std::vector<int>> induced(const ChainGraph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.size(), -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> succ(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (int w : g.succ[verts[i]])
            if (pos[w] != -1) succ[i].push_back(pos[w]);
    return succ;
}

inline bool strongly_connected(const std::vector<std::vector<int>>& succ) {
    if (succ.empty()) return false;
    auto comp = scc_ids(succ);
    int c0 = comp[0];
    for (int c : comp)
        if (c != c0) return false;
    // A singleton must carry a self-loop to count (mutual reachability along
    // paths of positive length).
    if (succ.size() == 1)
        return std::find(succ[0].begin(), succ[0].end(), 0) != succ[0].end();
    return true;
}

// gcd of directed cycle lengths of a strongly connected graph, via BFS level
// differences from vertex 0 of the relabeled graph.
inline int graph_period(const std::vector<std::vector<int>>& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<int> level(n, -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w : succ[v])
            if (level[w] == -1) {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
    }
    int g = 0;
    for (int v = 0; v < n; ++v)
        for (int w : succ[v]) g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
    return g == 0 ? 1 : g;
}

}  // namespace detail

// Points lying on a directed cycle of the epsilon-chain graph, sorted.
inline std::vector<int> chain_recurrent(const FiniteSystem& sys, const Scalar& epsilon) {
    ChainGraph g = build_chain_graph(sys, epsilon);
    auto comp = detail::scc_ids(g.succ);
    std::vector<int> comp_size(sys.size(), 0);
    for (int c : comp) ++comp_size[c];
    std::vector<int> out;
    for (int v = 0; v < sys.size(); ++v)
        if (comp_size[comp[v]] > 1 || g.has_edge(v, v)) out.push_back(v);
    return out;
}

// The exact nonwandering set of a finite system is its set of periodic
// points, and it coincides with chain_recurrent at epsilon = 0. Both are
// computed and compared; a mismatch would mean a broken invariant, not a
// property of the input.
inline std::vector<int> nonwandering_exact(const FiniteSystem& sys) {
    std::vector<int> per;
    for (const auto& pp : periodic_points(sys)) per.push_back(pp.point);
    auto cr = chain_recurrent(sys, Scalar(0));
    if (per != cr) throw error("internal invariant broken: periodic set != chain recurrent(0)");
    return per;
}

// Cycle-carrying strongly connected components of the epsilon-chain graph,
// i.e. the partition of chain_recurrent into basic sets. Sorted by smallest
// member; each set sorted.
inline std::vector<std::vector<int>> basic_sets(const FiniteSystem& sys, const Scalar& epsilon) {
    ChainGraph g = build_chain_graph(sys, epsilon);
    auto comp = detail::scc_ids(g.succ);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> sets(ncomp);
    for (int v = 0; v < sys.size(); ++v) sets[comp[v]].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& s : sets) {
        bool cyclic = s.size() > 1 || g.has_edge(s[0], s[0]);
        if (cyclic) out.push_back(std::move(s));
    }
    return out;
}

enum class TransitivitySemantics { ExactDiscrete, ChainSurrogate };

struct TransitivityVerdict {
    bool transitive;
    TransitivitySemantics semantics;
};

// Transitivity of f restricted to subset. At epsilon = 0 strong connectivity
// of the induced functional graph means exactly "subset is one periodic
// orbit", the honest discrete meaning; at epsilon > 0 the verdict is the
// chain surrogate (induced epsilon-chain graph strongly connected).
inline TransitivityVerdict is_transitive(const FiniteSystem& sys, const std::vector<int>& subset,
                                         const Scalar& epsilon) {
    if (subset.empty()) throw parameter_error("empty subset");
    ChainGraph g = build_chain_graph(sys, epsilon);
    bool sc = detail::strongly_connected(detail::induced(g, subset));
    return {sc, epsilon == Scalar(0) ? TransitivitySemantics::ExactDiscrete
                                     : TransitivitySemantics::ChainSurrogate};
}

struct CyclicDecomposition {
    int period;                              // m = gcd of cycle lengths
    std::vector<std::vector<int>> components;  // C_0..C_{m-1}; base point in C_0
};

// Cyclic decomposition of a basic set: components are the residue classes of
// BFS path length mod m from the base vertex (the smallest index in the
// set). Edges advance the residue by one, so fmap sends C_i into C_{i+1 mod
// m}, exactly when epsilon = 0.
inline CyclicDecomposition cyclic_decomposition(const FiniteSystem& sys,
                                                const std::vector<int>& basic_set,
                                                const Scalar& epsilon) {
    std::vector<int> verts = basic_set;
    std::sort(verts.begin(), verts.end());
    ChainGraph g = build_chain_graph(sys, epsilon);
    auto succ = detail::induced(g, verts);
    if (!detail::strongly_connected(succ))
        throw precondition_error("set is not strongly connected in the chain graph");
    int m = detail::graph_period(succ);
    // BFS levels from the base vertex (index 0 after sorting).
    std::vector<int> level(verts.size(), -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : succ[queue[qi]])
            if (level[w] == -1) {
                level[w] = level[queue[qi]] + 1;
                queue.push_back(w);
            }
    CyclicDecomposition out;
    out.period = m;
    out.components.assign(m, {});
    for (size_t i = 0; i < verts.size(); ++i)
        out.components[((level[i] % m) + m) % m].push_back(verts[i]);
    return out;
}

// Mixing of one cyclic component: the epsilon-chain graph of f^m restricted
// to the component must be primitive (strongly connected with period 1). At
// epsilon = 0 components are single f^m-fixed points and the verdict is true.
inline bool is_mixing(const FiniteSystem& sys, const std::vector<int>& component, int m,
                      const Scalar& epsilon) {
    if (m < 1) throw parameter_error("period must be positive");
    if (component.empty()) throw parameter_error("empty component");
    FiniteSystem pow = power(sys, m);
    ChainGraph g = build_chain_graph(pow, epsilon);
    auto succ = detail::induced(g, component);
    if (!detail::strongly_connected(succ)) return false;
    return detail::graph_period(succ) == 1;
}

struct BasicSetAnalysis {
    std::vector<int> points;
    int period;
    std::vector<std::vector<int>> components;
    TransitivityVerdict transitive;
    std::vector<bool> mixing;  // one verdict per component, under f^period
};

struct Decomposition {
    Scalar epsilon;
    std::vector<int> chain_recurrent;
    std::vector<BasicSetAnalysis> sets;
};

// Full pipeline at one threshold: chain recurrent set, its partition into
// basic sets, and each set's cyclic structure with per-component mixing.
inline Decomposition decompose(const FiniteSystem& sys, const Scalar& epsilon) {
    Decomposition out;
    out.epsilon = epsilon;
    out.chain_recurrent = chain_recurrent(sys, epsilon);
    for (auto& bs : basic_sets(sys, epsilon)) {
        BasicSetAnalysis a;
        a.points = bs;
        auto cyc = cyclic_decomposition(sys, bs, epsilon);
        a.period = cyc.period;
        a.components = std::move(cyc.components);
        a.transitive = is_transitive(sys, bs, epsilon);
        for (const auto& comp : a.components)
            a.mixing.push_back(is_mixing(sys, comp, a.period, epsilon));
        out.sets.push_back(std::move(a));
    }
    return out;
}

}  // namespace findyn
