#pragma once

// Built-in example systems. Each gallery item bundles a finite system with a
// list of machine-checkable expectations: named operations, parameters, the
// expected outcome, and a provenance tag ("claimed" for verdicts asserted by
// the construction the item models, "computed" for values derived
// independently). Running the expectations is the regression suite for the
// constructions.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "findyn/chain.hpp"
#include "findyn/errors.hpp"
#include "findyn/invlimit.hpp"
#include "findyn/scalar.hpp"
#include "findyn/shadow.hpp"
#include "findyn/space.hpp"

namespace findyn {

struct Expectation {
    std::string operation;
    nlohmann::json params;
    nlohmann::json expected;
    std::string provenance;  // "claimed" or "computed"
    std::function<nlohmann::json(const FiniteSystem&)> run;
};

struct GalleryItem {
    std::string name;
    FiniteSystem system;
    nlohmann::json meta;
    std::vector<Expectation> expectations;
};

struct ExpectationOutcome {
    std::string operation;
    nlohmann::json params;
    nlohmann::json expected;
    nlohmann::json actual;
    std::string provenance;
    bool passed;
};

inline std::vector<ExpectationOutcome> check_gallery_item(const GalleryItem& item) {
    std::vector<ExpectationOutcome> out;
    for (const auto& e : item.expectations) {
        nlohmann::json actual = e.run(item.system);
        out.push_back({e.operation, e.params, e.expected, actual, e.provenance,
                       actual == e.expected});
    }
    return out;
}

namespace detail {

inline Expectation expect_bi_asymptotic(const Rational& c, bool value, std::string provenance) {
    return {"classify_expansivity",
            {{"c", c.to_string()}, {"field", "bi_asymptotically_c_expansive"}},
            value,
            std::move(provenance),
            [c](const FiniteSystem& s) {
                return classify_expansivity(s, Scalar(c)).bi_asymptotically_c_expansive;
            }};
}

inline Expectation expect_metric_valid() {
    return {"validate_metric",
            {},
            0,
            "computed",
            [](const FiniteSystem& s) {
                return static_cast<int>(validate_metric(s.space).violations.size());
            }};
}

inline Expectation expect_point_count(int count) {
    return {"point_count", {}, count, "computed",
            [](const FiniteSystem& s) { return s.size(); }};
}

}  // namespace detail

// Three points on a cycle under the discrete metric; the smallest transitive
// example.
inline GalleryItem s3() {
    GalleryItem item;
    item.name = "s3";
    item.system = build_system(uniform_space({"a", "b", "c"}, Scalar(1)), {1, 2, 0});
    item.meta = {{"description", "3-cycle under the discrete metric"}};
    item.expectations = {
        {"decompose",
         {{"epsilon", "0"}},
         {{"chain_recurrent", 3}, {"basic_sets", 1}, {"periods", {3}}},
         "computed",
         [](const FiniteSystem& s) {
             auto dec = decompose(s, Scalar(0));
             nlohmann::json periods = nlohmann::json::array();
             for (const auto& b : dec.sets) periods.push_back(b.period);
             return nlohmann::json{{"chain_recurrent", dec.chain_recurrent.size()},
                                   {"basic_sets", dec.sets.size()},
                                   {"periods", periods}};
         }},
        {"is_transitive",
         {{"epsilon", "0"}},
         true,
         "computed",
         [](const FiniteSystem& s) {
             std::vector<int> all(s.size());
             for (int i = 0; i < s.size(); ++i) all[i] = i;
             return is_transitive(s, all, Scalar(0)).transitive;
         }},
        {"classify_expansivity",
         {{"c", "1/2"}, {"field", "positively_expansive"}},
         true,
         "computed",
         [](const FiniteSystem& s) {
             return classify_expansivity(s, Scalar::ratio(1, 2)).positively_expansive;
         }},
        detail::expect_bi_asymptotic(Rational(1, 2), true, "computed"),
        detail::expect_bi_asymptotic(Rational(1, 1), false, "computed"),
        {"check_forward_shadowing_exact",
         {{"delta", "1"}, {"epsilon", "1"}},
         true,
         "computed",
         [](const FiniteSystem& s) {
             return check_forward_shadowing_exact(s, Scalar(1), Scalar(1)).holds;
         }},
    };
    return item;
}

// Two points, one attracting fixed point; the smallest non-surjective
// example.
inline GalleryItem s2() {
    GalleryItem item;
    item.name = "s2";
    FiniteMetricSpace space = uniform_space({"a", "b"}, Scalar(1));
    item.system = build_system(std::move(space), {1, 1});
    item.meta = {{"description", "a maps to the fixed point b"}};
    item.expectations = {
        {"chain_recurrent",
         {{"epsilon", "0"}},
         {"b"},
         "computed",
         [](const FiniteSystem& s) {
             nlohmann::json out = nlohmann::json::array();
             for (int v : chain_recurrent(s, Scalar(0))) out.push_back(s.space.labels[v]);
             return out;
         }},
        {"check_forward_shadowing_exact",
         {{"delta", "1/2"}, {"epsilon", "1/2"}},
         true,
         "computed",
         [](const FiniteSystem& s) {
             return check_forward_shadowing_exact(s, Scalar::ratio(1, 2), Scalar::ratio(1, 2))
                 .holds;
         }},
        {"check_forward_shadowing_exact",
         {{"delta", "1"}, {"epsilon", "1/2"}},
         false,
         "computed",
         [](const FiniteSystem& s) {
             return check_forward_shadowing_exact(s, Scalar(1), Scalar::ratio(1, 2)).holds;
         }},
        {"check_periodic_biinfinite_tracing",
         {{"points", {"a", "b"}}, {"epsilon", "0"}},
         false,
         "computed",
         [](const FiniteSystem& s) {
             PseudoOrbit po{{s.label_index("a"), s.label_index("b")}, Scalar(1), true};
             return check_periodic_biinfinite_tracing(s, po, Scalar(0));
         }},
    };
    return item;
}

// The squaring map on [0,1], discretized to the uniform grid {i/N}: each
// value i^2/N^2 is sent to the nearest grid point (ties to the lower index).
// Both endpoints are fixed; everything in between drains to 0.
inline GalleryItem square_grid(int N) {
    if (N < 2) throw parameter_error("square_grid requires N >= 2");
    std::vector<Scalar> samples(N + 1);
    for (int i = 0; i <= N; ++i)
        samples[i] = Scalar::ratio(static_cast<long long>(i) * i,
                                   static_cast<long long>(N) * N);
    GalleryItem item;
    item.name = "square_grid";
    item.system = discretize_interval_map(samples);
    item.meta = {{"N", N},
                 {"description", "x^2 on [0,1] sampled on the grid {i/N}, nearest-point rounding"}};
    item.expectations = {
        {"fixed_points",
         {},
         {0, N},
         "claimed",
         [](const FiniteSystem& s) { return fixed_points(s); }},
        {"decompose",
         {{"epsilon", "0"}, {"field", "basic_set_count"}},
         2,
         "claimed",
         [](const FiniteSystem& s) {
             return static_cast<int>(decompose(s, Scalar(0)).sets.size());
         }},
        detail::expect_bi_asymptotic(Rational(2, 5), true, "claimed"),
    };
    if (N == 4)
        item.expectations.push_back({"fmap", {}, {0, 0, 1, 2, 4}, "computed",
                                     [](const FiniteSystem& s) { return s.fmap; }});
    if (N == 8)
        item.expectations.push_back({"fmap", {}, {0, 0, 0, 1, 2, 3, 4, 6, 8}, "computed",
                                     [](const FiniteSystem& s) { return s.fmap; }});
    return item;
}

namespace detail {

// The funnel's point set: the two fixed endpoints, the inward chain
// -(i-1)/i and outward chain (i-1)/i for i <= I, and for each level
// m = 1..M the auxiliary chain -i/(i+1) + 1/(2^m i(i+1)), i = 1..I-1,
// which slides down one index per step and is injected at 0 from i = 1.
struct FunnelPoints {
    std::vector<Rational> coords;

    int find(const Rational& c) const {
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] == c) return static_cast<int>(i);
        throw error("internal invariant broken: funnel image point missing");
    }
};

inline Rational funnel_aux(int m, int i) {
    return Rational(-i, i + 1) + Rational(1, (1LL << m) * i * (i + 1));
}

}  // namespace detail

// A compact funnel: two fixed endpoints at -1 and 1, a chain climbing from
// -1 toward 1 through 0, and M auxiliary chains merging into it at 0. Every
// non-fixed point drifts to 1 forward; backward chains drain toward -1 or
// terminate. Truncated at depth I: the outward chain is capped by sending
// (I-1)/I to 1, and the deepest auxiliary points have no preimages, so the
// eventual image is just the two endpoints.
inline GalleryItem funnel(int I, int M) {
    if (I < 3) throw parameter_error("funnel requires I >= 3");
    if (M < 1) throw parameter_error("funnel requires M >= 1");
    detail::FunnelPoints pts;
    pts.coords.push_back(Rational(-1, 1));
    for (int i = I; i >= 2; --i) pts.coords.push_back(Rational(-(i - 1), i));
    pts.coords.push_back(Rational(0, 1));
    for (int i = 2; i <= I; ++i) pts.coords.push_back(Rational(i - 1, i));
    pts.coords.push_back(Rational(1, 1));
    for (int m = 1; m <= M; ++m)
        for (int i = 1; i <= I - 1; ++i) pts.coords.push_back(detail::funnel_aux(m, i));

    const int n = static_cast<int>(pts.coords.size());
    std::vector<int> fmap(n, -1);
    auto set = [&](const Rational& from, const Rational& to) {
        fmap[pts.find(from)] = pts.find(to);
    };
    set(Rational(1, 1), Rational(1, 1));
    set(Rational(-1, 1), Rational(-1, 1));
    for (int i = 2; i <= I; ++i) set(Rational(-(i - 1), i), Rational(-(i - 2), i - 1));
    for (int i = 1; i <= I - 1; ++i) set(Rational(i - 1, i), Rational(i, i + 1));
    set(Rational(I - 1, I), Rational(1, 1));
    for (int m = 1; m <= M; ++m) {
        for (int i = 2; i <= I - 1; ++i)
            fmap[pts.find(detail::funnel_aux(m, i))] =
                pts.find(Rational(-(i - 1), i) + Rational(1, (1LL << m) * i * (i - 1)));
        set(detail::funnel_aux(m, 1), Rational(0, 1));
    }

    std::vector<std::string> labels(n);
    std::vector<std::vector<Scalar>> coords(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = pts.coords[i].to_string();
        coords[i] = {Scalar(pts.coords[i])};
    }
    GalleryItem item;
    item.name = "funnel";
    item.system = build_system(space_from_coords(std::move(labels), coords), std::move(fmap));
    item.meta = {{"I", I},
                 {"M", M},
                 {"description",
                  "two fixed endpoints with all other chains funneling from -1 toward 1"},
                 {"truncation",
                  "outward chain capped by sending (I-1)/I to 1; the deepest auxiliary points "
                  "have no preimages and drop out of the eventual image"}};

    const int kw = std::min(4, M);      // auxiliary level of the witness pair
    const int Lw = std::min(4, I - 2);  // deepest backward reach inside the truncation
    const Rational cw(1, 1LL << kw);
    item.expectations = {
        detail::expect_point_count(2 * I + 1 + M * (I - 1)),
        {"eventual_image",
         {},
         {"-1", "1"},
         "computed",
         [](const FiniteSystem& s) {
             nlohmann::json out = nlohmann::json::array();
             for (int v : eventual_image(s).points) out.push_back(s.space.labels[v]);
             return out;
         }},
        detail::expect_bi_asymptotic(Rational(1, 5), true, "claimed"),
        {"window_invariant_pairs",
         {{"c", cw.to_string()}, {"L", Lw}, {"first", "-1/2"}},
         true,
         "claimed",
         [cw, Lw](const FiniteSystem& s) {
             int a = s.label_index("-1/2");
             auto set = window_invariant_pairs(s, Scalar(cw), Lw);
             for (const auto& pr : set.pairs)
                 if (pr.first == a && pr.second != a) return true;
             return false;
         }},
        {"window_invariant_pairs",
         {{"c", cw.to_string()}, {"L", I + 1}, {"first", "-1/2"}},
         false,
         "computed",
         [cw, I](const FiniteSystem& s) {
             int a = s.label_index("-1/2");
             auto set = window_invariant_pairs(s, Scalar(cw), I + 1);
             for (const auto& pr : set.pairs)
                 if (pr.first == a && pr.second != a) return true;
             return false;
         }},
    };
    return item;
}

namespace detail {

// Base orbit points of the satellite system are the shift orbits of the
// periodic binary words (0^{k-1} 1)^infinity for k = 2..K+1. The phase-j
// point of orbit k is the sequence whose bit at position i is set exactly
// when i + j = k - 1 (mod k); the shift advances the phase.
inline bool satellite_bit(int k, int j, long long i) {
    long long r = (i + j) % k;
    if (r < 0) r += k;
    return r == k - 1;
}

// Sequence distance 2^(-a) where a is the least |i| at which the two
// sequences differ. Two distinct periodic words with periods k1, k2 must
// differ within |i| <= k1 + k2 (a longer agreement window would force a
// common refinement of both periods and hence equality).
inline Rational satellite_d0(int k1, int j1, int k2, int j2) {
    if (k1 == k2 && j1 == j2) return Rational(0, 1);
    for (long long a = 0; a <= k1 + k2; ++a) {
        if (satellite_bit(k1, j1, a) != satellite_bit(k2, j2, a) ||
            satellite_bit(k1, j1, -a) != satellite_bit(k2, j2, -a))
            return Rational(1, 1LL << a);
    }
    throw error("internal invariant broken: distinct base words never differ");
}

}  // namespace detail

// Finitely many periodic orbits of the binary shift (periods 2..K+1), each
// dressed with N-1 satellite copies per phase. A satellite sits at constant
// distance 1/k from its anchor orbit and from its sibling satellites, so
// every point's dynamical 1/2-ball holds exactly N points: the system is
// N-expansive but not (N-1)-expansive, and orbit pairs at constant distance
// 1/k defeat every asymptotic merging property.
inline GalleryItem satellite_shift(int K, int N) {
    if (K < 2) throw parameter_error("satellite_shift requires K >= 2");
    if (N < 2) throw parameter_error("satellite_shift requires N >= 2");

    struct Desc {
        bool satellite;
        int i, k, j;
    };
    std::vector<Desc> desc;
    std::vector<std::string> labels;
    for (int k = 2; k <= K + 1; ++k)
        for (int j = 0; j < k; ++j) {
            desc.push_back({false, 0, k, j});
            labels.push_back("p" + std::to_string(k) + "." + std::to_string(j));
        }
    for (int k = 2; k <= K + 1; ++k)
        for (int i = 1; i <= N - 1; ++i)
            for (int j = 0; j < k; ++j) {
                desc.push_back({true, i, k, j});
                labels.push_back("q" + std::to_string(i) + "." + std::to_string(k) + "." +
                                 std::to_string(j));
            }

    const int n = static_cast<int>(desc.size());
    FiniteMetricSpace space;
    space.labels = labels;
    space.dist.assign(n, std::vector<Scalar>(n, Scalar(0)));
    auto dist = [&](const Desc& a, const Desc& b) -> Rational {
        if (!a.satellite && !b.satellite) return detail::satellite_d0(a.k, a.j, b.k, b.j);
        if (a.satellite && !b.satellite)
            return Rational(1, a.k) + detail::satellite_d0(a.k, a.j, b.k, b.j);
        if (!a.satellite && b.satellite)
            return Rational(1, b.k) + detail::satellite_d0(b.k, b.j, a.k, a.j);
        if (a.k == b.k && a.j == b.j) return Rational(1, a.k);  // distinct siblings
        return Rational(1, a.k) + Rational(1, b.k) + detail::satellite_d0(a.k, a.j, b.k, b.j);
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) space.dist[x][y] = Scalar(dist(desc[x], desc[y]));

    auto index_of = [&](bool satellite, int i, int k, int j) {
        for (int v = 0; v < n; ++v)
            if (desc[v].satellite == satellite && desc[v].i == i && desc[v].k == k &&
                desc[v].j == j)
                return v;
        throw error("internal invariant broken: satellite point missing");
    };
    std::vector<int> fmap(n);
    for (int v = 0; v < n; ++v)
        fmap[v] = index_of(desc[v].satellite, desc[v].i, desc[v].k, (desc[v].j + 1) % desc[v].k);

    GalleryItem item;
    item.name = "satellite_shift";
    item.system = build_system(std::move(space), std::move(fmap));
    item.meta = {{"K", K},
                 {"N", N},
                 {"description",
                  "periodic binary-shift orbits of periods 2..K+1 with N-1 satellites per phase"},
                 {"base_words",
                  "orbit k is the shift orbit of (0^(k-1) 1)^infinity; the phase-j point has "
                  "bit i set exactly when i + j = k - 1 (mod k)"}};

    item.expectations = {
        detail::expect_point_count(N * ((K + 1) * (K + 2) / 2 - 1)),
        detail::expect_metric_valid(),
        {"check_N_expansive",
         {{"c", "1/2"}, {"N", N}},
         true,
         "claimed",
         [N](const FiniteSystem& s) { return check_N_expansive(s, Scalar::ratio(1, 2), N); }},
        {"check_N_expansive",
         {{"c", "1/2"}, {"N", N - 1}},
         false,
         "claimed",
         [N](const FiniteSystem& s) { return check_N_expansive(s, Scalar::ratio(1, 2), N - 1); }},
        {"classify_expansivity",
         {{"c", "1/2"}, {"field", "asymptotically_expansive"}},
         false,
         "claimed",
         [](const FiniteSystem& s) {
             return classify_expansivity(s, Scalar::ratio(1, 2)).asymptotically_expansive;
         }},
        detail::expect_bi_asymptotic(Rational(1, 2), false, "claimed"),
        detail::expect_bi_asymptotic(Rational(1, K + 2), true, "computed"),
    };
    if (N >= 3) {
        for (int k = 2; k <= K + 1; ++k) {
            item.expectations.push_back(
                {"orbit_pair_distance",
                 {{"a", "q1." + std::to_string(k) + ".0"},
                  {"b", "q2." + std::to_string(k) + ".0"},
                  {"steps", 20}},
                 Rational(1, k).to_string(),
                 "claimed",
                 [k](const FiniteSystem& s) -> nlohmann::json {
                     int a = s.label_index("q1." + std::to_string(k) + ".0");
                     int b = s.label_index("q2." + std::to_string(k) + ".0");
                     Scalar first = s.d(a, b);
                     for (int t = 0; t < 20; ++t) {
                         a = s.f(a);
                         b = s.f(b);
                         if (s.d(a, b) != first) return "nonconstant";
                     }
                     return first.to_string();
                 }});
        }
    }
    return item;
}

// Distance profile of the drifting orbit pair: two points riding parallel
// exponential tails offset by 1/k and 1/p. Both coordinates advance in
// lockstep, so the distance at step n is
//   e^(-(1+M+n)) (e^(1/k) - e^(1/p)) + (1/k - 1/p),
// strictly decreasing with limit 1/k - 1/p > 0: the pair stays epsilon-close
// from the start (for suitable M) yet never merges.
inline std::vector<double> drift_profile(int k, int p, int M, int n_max) {
    if (k < 1 || k >= p) throw parameter_error("drift_profile requires 1 <= k < p");
    if (M < 0 || n_max < 0) throw parameter_error("drift_profile requires M, n_max >= 0");
    std::vector<double> out(n_max + 1);
    const double gap = std::exp(1.0 / k) - std::exp(1.0 / p);
    const double limit = 1.0 / k - 1.0 / p;
    for (int n = 0; n <= n_max; ++n)
        out[n] = std::exp(-(1.0 + M + n)) * gap + limit;
    return out;
}

struct SftComponent {
    std::vector<int> vertices;
    int period;
    bool mixing;
};

struct SftDecomposition {
    std::vector<SftComponent> components;
    std::vector<std::string> warnings;
};

// Combinatorial decomposition of a 0/1 adjacency matrix: cycle-carrying
// strongly connected components with their cycle-length gcd and primitivity
// (period 1 = mixing). A zero row or column is reported as a warning (the
// matrix then describes no two-sided shift) and the decomposition proceeds
// on what remains.
inline SftDecomposition sft_decompose(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    for (const auto& row : adjacency) {
        if (static_cast<int>(row.size()) != n) throw input_error("adjacency matrix is not square");
        for (int v : row)
            if (v != 0 && v != 1) throw input_error("adjacency entries must be 0 or 1");
    }
    SftDecomposition out;
    ChainGraph g;
    g.epsilon = Scalar(0);
    g.succ.resize(n);
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adjacency[i][j]) {
                g.succ[i].push_back(j);
                ++indeg[j];
            }
    for (int i = 0; i < n; ++i) {
        if (g.succ[i].empty())
            out.warnings.push_back("row " + std::to_string(i) +
                                   " is zero: vertex has no successor");
        if (indeg[i] == 0)
            out.warnings.push_back("column " + std::to_string(i) +
                                   " is zero: vertex has no predecessor");
    }
    auto comp = detail::scc_ids(g.succ);
    int comp_count = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) verts.push_back(v);
        auto sub = detail::induced(g, verts);
        if (!detail::strongly_connected(sub)) continue;  // transient singleton
        int period = detail::graph_period(sub);
        out.components.push_back({verts, period, period == 1});
    }
    return out;
}

// Random system on n points scattered in the unit square (Euclidean
// distances, so the metric axioms hold by construction) with a uniformly
// random self-map. Deterministic for a fixed seed.
inline FiniteSystem random_system(int n, std::uint64_t seed) {
    if (n < 1) throw parameter_error("random system needs n >= 1");
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::vector<Scalar>> coords;
    while (static_cast<int>(coords.size()) < n) {
        double x = unit(), y = unit();
        bool fresh = true;
        for (const auto& c : coords)
            if (c[0].to_double() == x && c[1].to_double() == y) fresh = false;
        if (fresh) coords.push_back({Scalar::from_double(x), Scalar::from_double(y)});
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    std::vector<int> fmap(n);
    for (int i = 0; i < n; ++i) fmap[i] = static_cast<int>(rng() % n);
    return build_system(space_from_coords(std::move(labels), coords), std::move(fmap));
}

inline FiniteSystem random_bijection(int n, std::uint64_t seed) {
    FiniteSystem sys = random_system(n, seed);
    std::mt19937_64 rng(~seed * 0x9e3779b97f4a7c15ULL + 1);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<int>(rng() % (i + 1))]);
    return build_system(sys.space, std::move(perm));
}

inline std::vector<std::string> gallery_names() {
    return {"s3",     "s2",     "square_grid",      "funnel",
            "satellite_shift", "random", "random_bijection", "drift_profile"};
}

// Builds a named gallery item. Integer parameters arrive as a JSON object;
// missing ones take the item's documented defaults. drift_profile produces a
// distance profile rather than a finite system and is refused here.
inline GalleryItem make_gallery_item(const std::string& name, const nlohmann::json& params,
                                     std::uint64_t seed = 1) {
    auto geti = [&](const char* key, int fallback) {
        return params.contains(key) ? params.at(key).get<int>() : fallback;
    };
    if (name == "s3") return s3();
    if (name == "s2") return s2();
    if (name == "square_grid") return square_grid(geti("N", 8));
    if (name == "funnel") return funnel(geti("I", 6), geti("M", 4));
    if (name == "satellite_shift") return satellite_shift(geti("K", 3), geti("N", 3));
    if (name == "random" || name == "random_bijection") {
        GalleryItem item;
        item.name = name;
        int n = geti("n", 6);
        item.system = name == "random" ? random_system(n, seed) : random_bijection(n, seed);
        item.meta = {{"n", n}, {"seed", seed}};
        item.expectations = {detail::expect_metric_valid()};
        return item;
    }
    if (name == "drift_profile")
        throw capability_error(
            "drift_profile emits a distance profile, not a finite system; use 'gallery emit'");
    throw input_error("unknown gallery item '" + name + "'");
}

}  // namespace findyn
