#pragma once

// Serialization: system files (JSON), analysis reports (JSON), chain graphs
// (DOT with components as clusters), and the scalar encoding shared by all of
// them. Exact rationals travel as "p/q" strings so thresholds survive a round
// trip bit-for-bit; measured (double) distances travel as JSON numbers.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "findyn/chain.hpp"
#include "findyn/errors.hpp"
#include "findyn/gallery.hpp"
#include "findyn/invlimit.hpp"
#include "findyn/scalar.hpp"
#include "findyn/shadow.hpp"
#include "findyn/space.hpp"

namespace findyn {

inline nlohmann::json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return s.rational().to_string();
    return s.to_double();
}

inline Scalar scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_number_float()) return Scalar::from_double(j.get<double>());
    throw input_error("expected a number or a \"p/q\" string, got: " + j.dump());
}

namespace detail {

inline std::string metric_violation_text(const FiniteMetricSpace& space,
                                         const MetricViolation& v) {
    auto name = [&](int i) { return "'" + space.labels[i] + "'"; };
    switch (v.kind) {
        case MetricViolationKind::Asymmetry:
            return "asymmetric distances between " + name(v.i) + " and " + name(v.j);
        case MetricViolationKind::Diagonal:
            return "nonzero self-distance at " + name(v.i);
        case MetricViolationKind::Indiscernible:
            return "zero distance between distinct points " + name(v.i) + " and " + name(v.j);
        case MetricViolationKind::Triangle:
            return "triangle inequality fails through " + name(v.i) + ", " + name(v.j) + ", " +
                   name(v.k);
        case MetricViolationKind::Negative:
            return "negative distance between " + name(v.i) + " and " + name(v.j);
    }
    return "unknown violation";
}

}  // namespace detail

// System file layout: { "labels": [...], "metric": {"type": "table", "dist":
// [[...]]} or {"type": "euclidean", "coords": [[...]]}, "map": [...],
// optional "meta" }. Indices are 0-based. Emission always uses the table
// form, which round-trips exactly.
inline nlohmann::json system_to_json(const FiniteSystem& sys,
                                     const nlohmann::json& meta = nullptr) {
    nlohmann::json dist = nlohmann::json::array();
    for (const auto& row : sys.space.dist) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(scalar_to_json(v));
        dist.push_back(std::move(r));
    }
    nlohmann::json out{{"labels", sys.space.labels},
                       {"metric", {{"type", "table"}, {"dist", std::move(dist)}}},
                       {"map", sys.fmap}};
    if (!meta.is_null()) out["meta"] = meta;
    return out;
}

inline FiniteSystem system_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw input_error("system document must be a JSON object");
    for (const char* key : {"labels", "metric", "map"})
        if (!j.contains(key)) throw input_error(std::string("system document lacks '") + key + "'");
    if (!j["labels"].is_array() || j["labels"].empty())
        throw input_error("'labels' must be a nonempty array");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw input_error("'labels' entries must be strings");
        labels.push_back(l.get<std::string>());
    }
    const int n = static_cast<int>(labels.size());

    const auto& metric = j["metric"];
    if (!metric.is_object() || !metric.contains("type"))
        throw input_error("'metric' must be an object with a 'type'");
    FiniteMetricSpace space;
    std::string type = metric["type"].get<std::string>();
    if (type == "table") {
        if (!metric.contains("dist") || !metric["dist"].is_array() ||
            static_cast<int>(metric["dist"].size()) != n)
            throw input_error("'metric.dist' must be an " + std::to_string(n) + "-row table");
        space.labels = labels;
        for (const auto& row : metric["dist"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw input_error("'metric.dist' rows must have " + std::to_string(n) +
                                  " entries");
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(scalar_from_json(v));
            space.dist.push_back(std::move(r));
        }
    } else if (type == "euclidean") {
        if (!metric.contains("coords") || !metric["coords"].is_array() ||
            static_cast<int>(metric["coords"].size()) != n)
            throw input_error("'metric.coords' must have one row per label");
        std::vector<std::vector<Scalar>> coords;
        for (const auto& row : metric["coords"]) {
            if (!row.is_array() || row.empty())
                throw input_error("'metric.coords' rows must be nonempty arrays");
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(scalar_from_json(v));
            coords.push_back(std::move(r));
        }
        space = space_from_coords(labels, coords);
    } else {
        throw input_error("unknown metric type '" + type + "'");
    }

    auto report = validate_metric(space);
    if (!report.valid())
        throw input_error("not a metric: " +
                          detail::metric_violation_text(space, report.violations.front()));

    if (!j["map"].is_array() || static_cast<int>(j["map"].size()) != n)
        throw input_error("'map' must list one image index per point");
    std::vector<int> fmap;
    for (const auto& v : j["map"]) {
        if (!v.is_number_integer()) throw input_error("'map' entries must be integers");
        fmap.push_back(v.get<int>());
    }
    return build_system(std::move(space), std::move(fmap));
}

inline FiniteSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
    return system_from_json(j);
}

inline nlohmann::json decomposition_to_json(const Decomposition& dec) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& b : dec.sets)
        sets.push_back({{"points", b.points},
                        {"period", b.period},
                        {"components", b.components},
                        {"transitive", b.transitive.transitive},
                        {"mixing", b.mixing}});
    return {{"epsilon", scalar_to_json(dec.epsilon)},
            {"chain_recurrent", dec.chain_recurrent},
            {"basic_sets", std::move(sets)}};
}

inline nlohmann::json expansivity_report_to_json(const ExpansivityReport& rep) {
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& [verdict, pairs] : rep.witnesses) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& pr : pairs) list.push_back({pr.first, pr.second});
        witnesses[verdict] = std::move(list);
    }
    nlohmann::json out{{"c", scalar_to_json(rep.c)},
                       {"positively_expansive", rep.positively_expansive},
                       {"c_expansive", rep.c_expansive},
                       {"asymptotically_expansive", rep.asymptotically_expansive},
                       {"bi_asymptotically_c_expansive", rep.bi_asymptotically_c_expansive},
                       {"witnesses", std::move(witnesses)}};
    out["weak_bi_asymptotic"] =
        rep.weak_bi_asymptotic ? nlohmann::json(*rep.weak_bi_asymptotic) : nlohmann::json();
    out["N_expansive_min_N"] =
        rep.n_expansive_min ? nlohmann::json(*rep.n_expansive_min) : nlohmann::json();
    return out;
}

inline nlohmann::json shadowing_report_to_json(const Scalar& delta, const Scalar& epsilon,
                                               const ForwardShadowingResult& res) {
    return {{"delta", scalar_to_json(delta)},
            {"epsilon", scalar_to_json(epsilon)},
            {"forward_shadowing", res.holds},
            {"counterexample",
             res.holds ? nlohmann::json() : nlohmann::json(res.counterexample)}};
}

inline nlohmann::json expectations_to_json(const GalleryItem& item) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : item.expectations)
        out.push_back({{"operation", e.operation},
                       {"params", e.params},
                       {"expected", e.expected},
                       {"provenance", e.provenance}});
    return out;
}

inline nlohmann::json outcomes_to_json(const std::vector<ExpectationOutcome>& outcomes) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& o : outcomes)
        out.push_back({{"operation", o.operation},
                       {"params", o.params},
                       {"expected", o.expected},
                       {"actual", o.actual},
                       {"provenance", o.provenance},
                       {"passed", o.passed}});
    return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

// DOT rendering of a chain graph. Cycle-carrying strongly connected
// components (the basic sets at this threshold) are grouped into cluster
// subgraphs; nodes carry the space's labels.
inline std::string chain_graph_to_dot(const FiniteSystem& sys, const ChainGraph& g) {
    const int n = g.size();
    auto comp = detail::scc_ids(g.succ);
    int comp_count = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::ostringstream out;
    out << "digraph chain {\n  rankdir=LR;\n  node [shape=circle];\n";
    int cluster = 0;
    std::vector<bool> clustered(n, false);
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) verts.push_back(v);
        bool cycles = verts.size() > 1 ||
                      std::find(g.succ[verts[0]].begin(), g.succ[verts[0]].end(), verts[0]) !=
                          g.succ[verts[0]].end();
        if (!cycles) continue;
        out << "  subgraph cluster_" << cluster++ << " {\n    label=\"basic set " << cluster - 1
            << "\";\n";
        for (int v : verts) {
            out << "    n" << v << " [label=\"" << detail::dot_escape(sys.space.labels[v])
                << "\"];\n";
            clustered[v] = true;
        }
        out << "  }\n";
    }
    for (int v = 0; v < n; ++v)
        if (!clustered[v])
            out << "  n" << v << " [label=\"" << detail::dot_escape(sys.space.labels[v])
                << "\"];\n";
    for (int v = 0; v < n; ++v)
        for (int w : g.succ[v]) out << "  n" << v << " -> n" << w << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace findyn
