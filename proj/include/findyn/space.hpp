#pragma once

// Finite metric spaces and finite dynamical systems. A system is a finite
// metric space together with a total self-map given as an index table; all
// downstream analyses (chain recurrence, expansivity variants, shadowing)
// operate on these exact finite objects.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findyn/errors.hpp"
#include "findyn/scalar.hpp"

namespace findyn {

// Labels plus a full pairwise distance table. The table is the ground truth;
// constructors from coordinates just fill it in.
struct FiniteMetricSpace {
    std::vector<std::string> labels;
    std::vector<std::vector<Scalar>> dist;

    int size() const { return static_cast<int>(labels.size()); }
    const Scalar& d(int i, int j) const { return dist[i][j]; }
};

enum class MetricViolationKind { Asymmetry, Diagonal, Indiscernible, Triangle, Negative };

struct MetricViolation {
    MetricViolationKind kind;
    int i, j, k;  // k = -1 unless kind == Triangle
};

struct MetricReport {
    std::vector<MetricViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Brute-force check of all metric axioms: nonnegativity, zero diagonal,
// positivity off the diagonal, symmetry, and the triangle inequality over
// every ordered triple. O(n^3); spaces here are small by design.
inline MetricReport validate_metric(const FiniteMetricSpace& space) {
    const int n = space.size();
    if (static_cast<int>(space.dist.size()) != n)
        throw input_error("distance table row count does not match label count");
    for (const auto& row : space.dist)
        if (static_cast<int>(row.size()) != n)
            throw input_error("distance table is not square");

    MetricReport report;
    const Scalar zero(0);
    for (int i = 0; i < n; ++i) {
        if (space.dist[i][i] != zero)
            report.violations.push_back({MetricViolationKind::Diagonal, i, i, -1});
        for (int j = 0; j < n; ++j) {
            if (space.dist[i][j] < zero)
                report.violations.push_back({MetricViolationKind::Negative, i, j, -1});
            if (i != j && space.dist[i][j] == zero)
                report.violations.push_back({MetricViolationKind::Indiscernible, i, j, -1});
            if (i < j && space.dist[i][j] != space.dist[j][i])
                report.violations.push_back({MetricViolationKind::Asymmetry, i, j, -1});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (space.dist[i][j] + space.dist[j][k] < space.dist[i][k])
                    report.violations.push_back({MetricViolationKind::Triangle, i, j, k});
    return report;
}

inline Scalar diameter(const FiniteMetricSpace& space) {
    Scalar best(0);
    for (int i = 0; i < space.size(); ++i)
        for (int j = i + 1; j < space.size(); ++j) best = max(best, space.dist[i][j]);
    return best;
}

// Sorted distinct distance values including 0; the natural threshold grid
// for epsilon/c sweeps (verdicts can only change at these values).
inline std::vector<Scalar> distance_values(const FiniteMetricSpace& space) {
    std::vector<Scalar> vals{Scalar(0)};
    for (int i = 0; i < space.size(); ++i)
        for (int j = i + 1; j < space.size(); ++j) vals.push_back(space.dist[i][j]);
    std::sort(vals.begin(), vals.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

// Space from coordinate vectors. Dimension 1 uses |x - y| and stays exact for
// exact coordinates; higher dimensions take the Euclidean square root and are
// double-valued.
inline FiniteMetricSpace space_from_coords(std::vector<std::string> labels,
                                           const std::vector<std::vector<Scalar>>& coords) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(coords.size()) != n)
        throw input_error("coordinate row count does not match label count");
    size_t dim = coords.empty() ? 0 : coords[0].size();
    for (const auto& c : coords)
        if (c.size() != dim) throw input_error("ragged coordinate rows");
    FiniteMetricSpace space;
    space.labels = std::move(labels);
    space.dist.assign(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dim == 1) {
                space.dist[i][j] = abs(coords[i][0] - coords[j][0]);
            } else {
                double s = 0;
                for (size_t t = 0; t < dim; ++t) {
                    double diff = coords[i][t].to_double() - coords[j][t].to_double();
                    s += diff * diff;
                }
                space.dist[i][j] = Scalar::from_double(std::sqrt(s));
            }
        }
    return space;
}

// Space with all off-diagonal distances equal; the discrete metric scaled.
inline FiniteMetricSpace uniform_space(std::vector<std::string> labels, const Scalar& d) {
    const int n = static_cast<int>(labels.size());
    FiniteMetricSpace space;
    space.labels = std::move(labels);
    space.dist.assign(n, std::vector<Scalar>(n, d));
    for (int i = 0; i < n; ++i) space.dist[i][i] = Scalar(0);
    return space;
}

// A finite system: total map fmap over a metric space. bijective is derived
// at construction and gates the operations that need invertibility.
struct FiniteSystem {
    FiniteMetricSpace space;
    std::vector<int> fmap;
    bool bijective = false;

    int size() const { return space.size(); }
    int f(int x) const { return fmap[x]; }
    const Scalar& d(int i, int j) const { return space.dist[i][j]; }
    int label_index(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (space.labels[i] == label) return i;
        throw input_error("unknown label '" + label + "'");
    }
};

inline FiniteSystem build_system(FiniteMetricSpace space, std::vector<int> fmap) {
    const int n = space.size();
    if (static_cast<int>(fmap.size()) != n)
        throw input_error("map length does not match space size");
    std::vector<int> hits(n, 0);
    for (int v : fmap) {
        if (v < 0 || v >= n) throw input_error("map image out of range");
        ++hits[v];
    }
    FiniteSystem sys;
    sys.space = std::move(space);
    sys.fmap = std::move(fmap);
    sys.bijective = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    return sys;
}

// f^k(x) by iteration; k is small everywhere in this library.
inline int iterate(const FiniteSystem& sys, int x, int k) {
    for (int t = 0; t < k; ++t) x = sys.f(x);
    return x;
}

// A finite stretch of a true orbit. points[t+1] = fmap(points[t]) holds for
// consecutive entries; origin_offset is the position of time 0, so the
// segment covers times -origin_offset .. size-1-origin_offset.
struct OrbitSegment {
    std::vector<int> points;
    int origin_offset = 0;

    int time_min() const { return -origin_offset; }
    int time_max() const { return static_cast<int>(points.size()) - 1 - origin_offset; }
    int at_time(int t) const { return points[t + origin_offset]; }
};

inline OrbitSegment make_orbit_segment(const FiniteSystem& sys, std::vector<int> points,
                                       int origin_offset) {
    if (points.empty()) throw parameter_error("empty orbit segment");
    if (origin_offset < 0 || origin_offset >= static_cast<int>(points.size()))
        throw parameter_error("orbit segment origin outside segment");
    for (size_t t = 0; t + 1 < points.size(); ++t)
        if (sys.f(points[t]) != points[t + 1])
            throw precondition_error("orbit segment breaks at position " + std::to_string(t));
    return OrbitSegment{std::move(points), origin_offset};
}

// Forward orbit segment x, f(x), ..., f^len-1(x) with time 0 at x.
inline OrbitSegment forward_segment(const FiniteSystem& sys, int x, int len) {
    if (len < 1) throw parameter_error("segment length must be positive");
    std::vector<int> pts(len);
    pts[0] = x;
    for (int t = 1; t < len; ++t) pts[t] = sys.f(pts[t - 1]);
    return OrbitSegment{std::move(pts), 0};
}

// Two-sided segment of a bijective system covering times t_min..t_max.
inline OrbitSegment two_sided_segment(const FiniteSystem& sys, int x, int t_min, int t_max) {
    if (!sys.bijective) throw capability_error("two-sided segments need a bijective map");
    if (t_min > 0 || t_max < 0 || t_min > t_max)
        throw parameter_error("segment must cover time 0");
    std::vector<int> inv(sys.size());
    for (int i = 0; i < sys.size(); ++i) inv[sys.f(i)] = i;
    std::vector<int> pts(t_max - t_min + 1);
    pts[-t_min] = x;
    for (int t = -t_min + 1; t < static_cast<int>(pts.size()); ++t) pts[t] = sys.f(pts[t - 1]);
    for (int t = -t_min - 1; t >= 0; --t) pts[t] = inv[pts[t + 1]];
    return OrbitSegment{std::move(pts), -t_min};
}

// Interval map discretization: samples are the map's values at the uniform
// grid 0, 1/N, ..., 1; each value is sent to the nearest grid point, ties to
// the lower index. Exact rational comparisons make the tie-break exact.
inline FiniteSystem discretize_interval_map(const std::vector<Scalar>& samples) {
    if (samples.size() < 2) throw parameter_error("need at least two samples (N >= 1)");
    const int n = static_cast<int>(samples.size());
    const long long N = n - 1;
    for (const auto& s : samples)
        if (s < Scalar(0) || Scalar(1) < s)
            throw parameter_error("sample value outside [0,1]");
    std::vector<std::vector<Scalar>> coords(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        coords[i] = {Scalar::ratio(i, N)};
        labels[i] = Rational(i, N).to_string();
    }
    std::vector<int> fmap(n);
    for (int i = 0; i < n; ++i) {
        int best = 0;
        Scalar bestDist = abs(samples[i] - coords[0][0]);
        for (int j = 1; j < n; ++j) {
            Scalar cand = abs(samples[i] - coords[j][0]);
            if (cand < bestDist) {  // strict: ties keep the lower index
                best = j;
                bestDist = cand;
            }
        }
        fmap[i] = best;
    }
    return build_system(space_from_coords(std::move(labels), coords), std::move(fmap));
}

// Subsystem on an f-invariant subset: fmap(subset) must equal subset. The
// error names a concrete offender, either a point escaping the subset or a
// subset point never hit from inside.
inline FiniteSystem restrict(const FiniteSystem& sys, const std::vector<int>& subset) {
    const int n = sys.size();
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < subset.size(); ++i) {
        int v = subset[i];
        if (v < 0 || v >= n) throw input_error("subset index out of range");
        if (pos[v] != -1) throw input_error("duplicate subset index");
        pos[v] = static_cast<int>(i);
    }
    if (subset.empty()) throw parameter_error("empty subset");
    std::vector<bool> hit(subset.size(), false);
    for (int v : subset) {
        if (pos[sys.f(v)] == -1)
            throw precondition_error("subset not invariant: '" + sys.space.labels[v] +
                                     "' maps outside");
        hit[pos[sys.f(v)]] = true;
    }
    for (size_t i = 0; i < subset.size(); ++i)
        if (!hit[i])
            throw precondition_error("subset not invariant: '" + sys.space.labels[subset[i]] +
                                     "' is not an image");
    FiniteMetricSpace space;
    const int m = static_cast<int>(subset.size());
    space.dist.assign(m, std::vector<Scalar>(m, Scalar(0)));
    for (int i = 0; i < m; ++i) {
        space.labels.push_back(sys.space.labels[subset[i]]);
        for (int j = 0; j < m; ++j) space.dist[i][j] = sys.d(subset[i], subset[j]);
    }
    std::vector<int> fmap(m);
    for (int i = 0; i < m; ++i) fmap[i] = pos[sys.f(subset[i])];
    return build_system(std::move(space), std::move(fmap));
}

// The k-th iterate system (same space, composed map); k >= 1.
inline FiniteSystem power(const FiniteSystem& sys, int k) {
    if (k < 1) throw parameter_error("power requires k >= 1");
    std::vector<int> fmap(sys.size());
    for (int i = 0; i < sys.size(); ++i) fmap[i] = iterate(sys, i, k);
    return build_system(sys.space, std::move(fmap));
}

// Product system under the max metric, componentwise map. Point (i,j) of the
// product has index i*|B| + j.
inline FiniteSystem product(const FiniteSystem& a, const FiniteSystem& b) {
    const int na = a.size(), nb = b.size();
    FiniteMetricSpace space;
    space.labels.reserve(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            space.labels.push_back("(" + a.space.labels[i] + "," + b.space.labels[j] + ")");
    const int n = na * nb;
    space.dist.assign(n, std::vector<Scalar>(n, Scalar(0)));
    std::vector<int> fmap(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            int p = i * nb + j;
            fmap[p] = a.f(i) * nb + b.f(j);
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    space.dist[p][k * nb + l] = max(a.d(i, k), b.d(j, l));
        }
    return build_system(std::move(space), std::move(fmap));
}

// Conjugated system on a target space: point x becomes h(x), the map becomes
// h o f o h^-1. h must be a bijection onto the target's index range.
inline FiniteSystem conjugate(const FiniteSystem& sys, const std::vector<int>& h,
                              const FiniteMetricSpace& target) {
    const int n = sys.size();
    if (target.size() != n) throw parameter_error("conjugation target size mismatch");
    if (static_cast<int>(h.size()) != n) throw parameter_error("conjugation map length mismatch");
    std::vector<int> hinv(n, -1);
    for (int i = 0; i < n; ++i) {
        if (h[i] < 0 || h[i] >= n || hinv[h[i]] != -1)
            throw parameter_error("conjugation map is not a bijection");
        hinv[h[i]] = i;
    }
    std::vector<int> fmap(n);
    for (int y = 0; y < n; ++y) fmap[y] = h[sys.f(hinv[y])];
    return build_system(target, std::move(fmap));
}

struct PeriodicPoint {
    int point;
    int least_period;
};

// Points on cycles of the functional graph, with least periods. Sorted by
// point index.
inline std::vector<PeriodicPoint> periodic_points(const FiniteSystem& sys) {
    const int n = sys.size();
    std::vector<PeriodicPoint> out;
    for (int x = 0; x < n; ++x) {
        // x is periodic iff f^k(x) == x for some 1 <= k <= n.
        int y = x;
        for (int k = 1; k <= n; ++k) {
            y = sys.f(y);
            if (y == x) {
                out.push_back({x, k});
                break;
            }
        }
    }
    return out;
}

inline std::vector<int> fixed_points(const FiniteSystem& sys) {
    std::vector<int> out;
    for (int x = 0; x < sys.size(); ++x)
        if (sys.f(x) == x) out.push_back(x);
    return out;
}

// The eventual cycle of x's forward orbit, as a sorted set.
inline std::vector<int> omega_limit(const FiniteSystem& sys, int x) {
    if (x < 0 || x >= sys.size()) throw input_error("point index out of range");
    std::vector<int> seen(sys.size(), -1);
    int t = 0, y = x;
    while (seen[y] == -1) {
        seen[y] = t++;
        y = sys.f(y);
    }
    // y is the first repeated point; the cycle is everything from its first
    // visit onward.
    std::vector<int> cycle;
    for (int v = 0; v < sys.size(); ++v)
        if (seen[v] >= seen[y]) cycle.push_back(v);
    return cycle;
}

}  // namespace findyn
