#pragma once

// Request pipeline behind the command-line tool. Parsing argv into an
// AnalysisRequest happens in the binary; everything after that — resolving
// the system, running the analysis, formatting the artifact, deciding the
// exit code — lives here so it can be driven in-process by tests.
//
// Exit codes: 0 success; 1 unusable input or parameters (including
// capability and precondition violations); 2 a --assert or gallery-check
// failure (the analysis itself succeeded); 3 resource budget exceeded.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "findyn/chain.hpp"
#include "findyn/errors.hpp"
#include "findyn/gallery.hpp"
#include "findyn/invlimit.hpp"
#include "findyn/io.hpp"
#include "findyn/scalar.hpp"
#include "findyn/shadow.hpp"
#include "findyn/space.hpp"

namespace findyn {

struct AnalysisRequest {
    std::string command;         // decompose | expansivity | shadow | gallery | sweep
    std::string gallery_action;  // list | emit | check
    std::string input_path;      // system JSON file; mutually exclusive with gallery_name
    std::string gallery_name;
    nlohmann::json item_params = nlohmann::json::object();
    std::uint64_t seed = 1;
    std::optional<Scalar> epsilon;
    std::optional<Scalar> c;
    std::optional<Scalar> delta;
    std::optional<int> window_L;  // adds the windowed pair set to an expansivity report
    std::string format = "json";  // json | dot | csv
    std::string assert_verdict;   // empty = no assertion
    std::string sweep_analysis;   // shadow | expansivity | decompose
    std::string delta_grid = "auto";
    std::string epsilon_grid = "auto";
    std::string c_grid = "auto";
};

struct RunResult {
    int exit_code = 0;
    std::string artifact;    // JSON/DOT/CSV text for stdout or --out
    std::string diagnostic;  // human-readable failure note, empty on success
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_assert = 2;
inline constexpr int exit_budget = 3;

namespace detail {

inline FiniteSystem resolve_system(const AnalysisRequest& req) {
    if (!req.input_path.empty() && !req.gallery_name.empty())
        throw parameter_error("pass either --input or --gallery, not both");
    if (!req.input_path.empty()) return load_system(req.input_path);
    if (!req.gallery_name.empty())
        return make_gallery_item(req.gallery_name, req.item_params, req.seed).system;
    throw parameter_error("no system: pass --input <file> or --gallery <name>");
}

// A grid is "auto" (the distinct distance values of the space, the only
// thresholds where verdicts can change) or a comma-separated value list.
inline std::vector<Scalar> parse_grid(const std::string& text, const FiniteMetricSpace& space) {
    std::vector<Scalar> grid;
    if (text == "auto") {
        grid = distance_values(space);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) grid.push_back(parse_scalar(tok));
    }
    if (grid.empty()) throw parameter_error("empty parameter grid");
    std::sort(grid.begin(), grid.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

inline void require_format(const AnalysisRequest& req, std::initializer_list<const char*> ok) {
    for (const char* f : ok)
        if (req.format == f) return;
    throw parameter_error("format '" + req.format + "' not supported for " + req.command);
}

inline const char* csv_bool(bool b) { return b ? "true" : "false"; }

inline RunResult run_decompose(const AnalysisRequest& req) {
    require_format(req, {"json", "dot", "csv"});
    FiniteSystem sys = resolve_system(req);
    if (!req.assert_verdict.empty())
        throw parameter_error("--assert applies to expansivity and shadow");
    Scalar eps = req.epsilon.value_or(Scalar(0));
    auto dec = decompose(sys, eps);
    RunResult res;
    if (req.format == "json") {
        res.artifact = dump_json(decomposition_to_json(dec));
    } else if (req.format == "dot") {
        res.artifact = chain_graph_to_dot(sys, build_chain_graph(sys, eps));
    } else {
        std::ostringstream out;
        out << "point,label,basic_set,component\n";
        std::vector<int> set_of(sys.size(), -1), comp_of(sys.size(), -1);
        for (size_t b = 0; b < dec.sets.size(); ++b)
            for (size_t ci = 0; ci < dec.sets[b].components.size(); ++ci)
                for (int v : dec.sets[b].components[ci]) {
                    set_of[v] = static_cast<int>(b);
                    comp_of[v] = static_cast<int>(ci);
                }
        for (int v = 0; v < sys.size(); ++v) {
            out << v << "," << sys.space.labels[v] << ",";
            if (set_of[v] >= 0)
                out << set_of[v] << "," << comp_of[v];
            else
                out << ",";
            out << "\n";
        }
        res.artifact = out.str();
    }
    return res;
}

inline bool lookup_verdict(const ExpansivityReport& rep, const std::string& name) {
    std::string v = name == "bi_asymptotic_c" ? "bi_asymptotically_c_expansive" : name;
    if (v == "positively_expansive") return rep.positively_expansive;
    if (v == "c_expansive") return rep.c_expansive;
    if (v == "asymptotically_expansive") return rep.asymptotically_expansive;
    if (v == "bi_asymptotically_c_expansive") return rep.bi_asymptotically_c_expansive;
    if (v == "expansive") {
        if (!rep.expansive) throw capability_error("'expansive' needs a bijective map");
        return *rep.expansive;
    }
    if (v == "weak_bi_asymptotic") {
        if (!rep.weak_bi_asymptotic)
            throw capability_error("'weak_bi_asymptotic' needs a bijective map");
        return *rep.weak_bi_asymptotic;
    }
    throw parameter_error("unknown verdict '" + name + "'");
}

inline RunResult run_expansivity(const AnalysisRequest& req) {
    require_format(req, {"json", "csv"});
    FiniteSystem sys = resolve_system(req);
    if (!req.c) throw parameter_error("expansivity requires --c");
    auto rep = classify_expansivity(sys, *req.c);
    RunResult res;
    if (req.format == "json") {
        nlohmann::json j = expansivity_report_to_json(rep);
        if (req.window_L) {
            auto windowed = window_invariant_pairs(sys, *req.c, *req.window_L);
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& pr : windowed.pairs) pairs.push_back({pr.first, pr.second});
            j["windowed"] = {{"L", *req.window_L}, {"pairs", std::move(pairs)}};
        }
        res.artifact = dump_json(j);
    } else {
        std::ostringstream out;
        out << "c,positively_expansive,c_expansive,asymptotically_expansive,"
               "bi_asymptotically_c_expansive\n"
            << rep.c.to_string() << "," << csv_bool(rep.positively_expansive) << ","
            << csv_bool(rep.c_expansive) << "," << csv_bool(rep.asymptotically_expansive) << ","
            << csv_bool(rep.bi_asymptotically_c_expansive) << "\n";
        res.artifact = out.str();
    }
    if (!req.assert_verdict.empty() && !lookup_verdict(rep, req.assert_verdict)) {
        res.exit_code = exit_assert;
        res.diagnostic = "assertion failed: " + req.assert_verdict + " is false at c = " +
                         req.c->to_string();
    }
    return res;
}

inline RunResult run_shadow(const AnalysisRequest& req) {
    require_format(req, {"json", "csv"});
    FiniteSystem sys = resolve_system(req);
    if (!req.delta || !req.epsilon) throw parameter_error("shadow requires --delta and --epsilon");
    auto result = check_forward_shadowing_exact(sys, *req.delta, *req.epsilon);
    RunResult res;
    if (req.format == "json") {
        res.artifact = dump_json(shadowing_report_to_json(*req.delta, *req.epsilon, result));
    } else {
        std::ostringstream out;
        out << "delta,epsilon,forward_shadowing\n"
            << req.delta->to_string() << "," << req.epsilon->to_string() << ","
            << csv_bool(result.holds) << "\n";
        res.artifact = out.str();
    }
    if (!req.assert_verdict.empty()) {
        if (req.assert_verdict != "forward_shadowing")
            throw parameter_error("unknown verdict '" + req.assert_verdict + "'");
        if (!result.holds) {
            res.exit_code = exit_assert;
            res.diagnostic = "assertion failed: forward_shadowing is false at delta = " +
                             req.delta->to_string() + ", epsilon = " + req.epsilon->to_string();
        }
    }
    return res;
}

inline RunResult run_gallery(const AnalysisRequest& req) {
    RunResult res;
    if (req.gallery_action == "list") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& name : gallery_names()) {
            nlohmann::json entry{{"name", name}};
            if (name == "square_grid") entry["params"] = {"N"};
            if (name == "funnel") entry["params"] = {"I", "M"};
            if (name == "satellite_shift") entry["params"] = {"K", "N"};
            if (name == "random" || name == "random_bijection") entry["params"] = {"n", "seed"};
            if (name == "drift_profile") {
                entry["params"] = {"k", "p", "M", "n_max"};
                entry["note"] = "emits a distance profile rather than a finite system";
            }
            out.push_back(std::move(entry));
        }
        res.artifact = dump_json(out);
        return res;
    }
    if (req.gallery_name.empty()) throw parameter_error("gallery emit/check need an item name");
    if (req.gallery_action == "emit") {
        if (req.gallery_name == "drift_profile") {
            auto geti = [&](const char* key, int fallback) {
                return req.item_params.contains(key) ? req.item_params.at(key).get<int>()
                                                     : fallback;
            };
            int k = geti("k", 2), p = geti("p", 3), M = geti("M", 5), n_max = geti("n_max", 40);
            auto values = drift_profile(k, p, M, n_max);
            res.artifact = dump_json(
                {{"name", "drift_profile"},
                 {"params", {{"k", k}, {"p", p}, {"M", M}, {"n_max", n_max}}},
                 {"values", values},
                 {"limit", 1.0 / k - 1.0 / p}});
            return res;
        }
        GalleryItem item = make_gallery_item(req.gallery_name, req.item_params, req.seed);
        nlohmann::json j = system_to_json(item.system, item.meta);
        j["expectations"] = expectations_to_json(item);
        res.artifact = dump_json(j);
        return res;
    }
    if (req.gallery_action == "check") {
        GalleryItem item = make_gallery_item(req.gallery_name, req.item_params, req.seed);
        auto outcomes = check_gallery_item(item);
        bool passed = std::all_of(outcomes.begin(), outcomes.end(),
                                  [](const ExpectationOutcome& o) { return o.passed; });
        res.artifact = dump_json(
            {{"item", item.name}, {"passed", passed}, {"outcomes", outcomes_to_json(outcomes)}});
        if (!passed) {
            res.exit_code = exit_assert;
            std::string failed;
            for (const auto& o : outcomes)
                if (!o.passed) failed += (failed.empty() ? "" : ", ") + o.operation;
            res.diagnostic = "gallery check failed: " + failed;
        }
        return res;
    }
    throw parameter_error("unknown gallery action '" + req.gallery_action +
                          "' (expected list, emit, or check)");
}

inline RunResult run_sweep(const AnalysisRequest& req) {
    FiniteSystem sys = resolve_system(req);
    if (!req.assert_verdict.empty()) throw parameter_error("--assert is not supported for sweep");
    std::ostringstream out;
    if (req.sweep_analysis == "shadow") {
        auto dgrid = parse_grid(req.delta_grid, sys.space);
        auto egrid = parse_grid(req.epsilon_grid, sys.space);
        out << "delta,epsilon,forward_shadowing\n";
        for (const auto& d : dgrid)
            for (const auto& e : egrid)
                out << d.to_string() << "," << e.to_string() << ","
                    << csv_bool(check_forward_shadowing_exact(sys, d, e).holds) << "\n";
    } else if (req.sweep_analysis == "expansivity") {
        auto cgrid = parse_grid(req.c_grid, sys.space);
        out << "c,positively_expansive,c_expansive,asymptotically_expansive,"
               "bi_asymptotically_c_expansive\n";
        for (const auto& c : cgrid) {
            auto rep = classify_expansivity(sys, c);
            out << c.to_string() << "," << csv_bool(rep.positively_expansive) << ","
                << csv_bool(rep.c_expansive) << "," << csv_bool(rep.asymptotically_expansive)
                << "," << csv_bool(rep.bi_asymptotically_c_expansive) << "\n";
        }
    } else if (req.sweep_analysis == "decompose") {
        auto egrid = parse_grid(req.epsilon_grid, sys.space);
        out << "epsilon,chain_recurrent,basic_sets\n";
        for (const auto& e : egrid) {
            auto dec = decompose(sys, e);
            out << e.to_string() << "," << dec.chain_recurrent.size() << "," << dec.sets.size()
                << "\n";
        }
    } else {
        throw parameter_error("sweep requires --analysis shadow|expansivity|decompose");
    }
    RunResult res;
    res.artifact = out.str();
    return res;
}

}  // namespace detail

// Runs a request, throwing library errors for unusable input; the exit code
// in the result covers only success (0) and failed assertions (2).
inline RunResult run_request(const AnalysisRequest& req) {
    if (req.command == "decompose") return detail::run_decompose(req);
    if (req.command == "expansivity") return detail::run_expansivity(req);
    if (req.command == "shadow") return detail::run_shadow(req);
    if (req.command == "gallery") return detail::run_gallery(req);
    if (req.command == "sweep") return detail::run_sweep(req);
    throw parameter_error("unknown command '" + req.command + "'");
}

// Same, but with every library error mapped to its exit code. This is the
// whole behavior of the binary minus argv parsing and file writing.
inline RunResult run_request_catching(const AnalysisRequest& req) {
    try {
        return run_request(req);
    } catch (const budget_error& e) {
        return {exit_budget, "", e.what()};
    } catch (const error& e) {
        return {exit_input, "", e.what()};
    } catch (const nlohmann::json::exception& e) {
        return {exit_input, "", e.what()};
    } catch (const std::exception& e) {
        return {exit_input, "", e.what()};
    }
}

}  // namespace findyn
