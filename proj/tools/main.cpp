// Command-line front end: argv goes in, an AnalysisRequest runs, the artifact
// lands on stdout or --out. All analysis logic lives in the library headers.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "findyn/findyn.hpp"

namespace {

struct RawArgs {
    std::string epsilon, c, delta;
    int L = -1;
    int N = -1, I = -1, M = -1, K = -1, n = -1, k = -1, p = -1, n_max = -1;
    std::string out_path;
};

void add_system_options(CLI::App* sub, findyn::AnalysisRequest& req, RawArgs& raw) {
    sub->add_option("--input", req.input_path, "system JSON file");
    sub->add_option("--gallery", req.gallery_name, "built-in gallery item name");
    sub->add_option("--seed", req.seed, "seed for randomized gallery items");
    sub->add_option("--N", raw.N, "gallery parameter N");
    sub->add_option("--I", raw.I, "gallery parameter I");
    sub->add_option("--M", raw.M, "gallery parameter M");
    sub->add_option("--K", raw.K, "gallery parameter K");
    sub->add_option("--n", raw.n, "gallery parameter n");
    sub->add_option("--k", raw.k, "gallery parameter k");
    sub->add_option("--p", raw.p, "gallery parameter p");
    sub->add_option("--n-max", raw.n_max, "gallery parameter n_max");
}

void add_output_options(CLI::App* sub, findyn::AnalysisRequest& req, RawArgs& raw) {
    sub->add_option("--format", req.format, "json, dot, or csv")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    sub->add_option("--out", raw.out_path, "write the artifact to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite dynamical systems toolkit: spectral decomposition, expansivity "
                 "taxonomy, shadowing"};
    app.require_subcommand(1);

    findyn::AnalysisRequest req;
    RawArgs raw;

    auto* dec = app.add_subcommand("decompose", "chain-recurrent set and basic sets");
    add_system_options(dec, req, raw);
    add_output_options(dec, req, raw);
    dec->add_option("--epsilon", raw.epsilon, "chain threshold (default 0)");

    auto* expv = app.add_subcommand("expansivity", "expansivity variant verdicts");
    add_system_options(expv, req, raw);
    add_output_options(expv, req, raw);
    expv->add_option("--c", raw.c, "expansivity threshold (required)");
    expv->add_option("--L", raw.L, "also report the windowed pair set at this window");
    expv->add_option("--assert", req.assert_verdict, "exit 2 unless this verdict is true");

    auto* shd = app.add_subcommand("shadow", "forward shadowing at fixed (delta, epsilon)");
    add_system_options(shd, req, raw);
    add_output_options(shd, req, raw);
    shd->add_option("--delta", raw.delta, "pseudo-orbit step slack (required)");
    shd->add_option("--epsilon", raw.epsilon, "tracing distance (required)");
    shd->add_option("--assert", req.assert_verdict, "exit 2 unless this verdict is true");

    auto* gal = app.add_subcommand("gallery", "built-in example systems");
    gal->require_subcommand(1);
    auto* gal_list = gal->add_subcommand("list", "list gallery items");
    add_output_options(gal_list, req, raw);
    auto* gal_emit = gal->add_subcommand("emit", "write an item's system and expectations");
    gal_emit->add_option("name", req.gallery_name, "gallery item name")->required();
    add_system_options(gal_emit, req, raw);
    add_output_options(gal_emit, req, raw);
    auto* gal_check = gal->add_subcommand("check", "run an item's expectations");
    gal_check->add_option("name", req.gallery_name, "gallery item name")->required();
    add_system_options(gal_check, req, raw);
    add_output_options(gal_check, req, raw);

    auto* swp = app.add_subcommand("sweep", "verdict grids over parameter values");
    add_system_options(swp, req, raw);
    add_output_options(swp, req, raw);
    swp->add_option("--analysis", req.sweep_analysis, "shadow, expansivity, or decompose")
        ->required();
    swp->add_option("--delta-grid", req.delta_grid, "comma list or 'auto'");
    swp->add_option("--epsilon-grid", req.epsilon_grid, "comma list or 'auto'");
    swp->add_option("--c-grid", req.c_grid, "comma list or 'auto'");

    CLI11_PARSE(app, argc, argv);

    req.command = app.get_subcommands().front()->get_name();
    if (req.command == "gallery")
        req.gallery_action = gal->get_subcommands().front()->get_name();
    try {
        if (!raw.epsilon.empty()) req.epsilon = findyn::parse_scalar(raw.epsilon);
        if (!raw.c.empty()) req.c = findyn::parse_scalar(raw.c);
        if (!raw.delta.empty()) req.delta = findyn::parse_scalar(raw.delta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return findyn::exit_input;
    }
    if (raw.L >= 0) req.window_L = raw.L;
    if (raw.N >= 0) req.item_params["N"] = raw.N;
    if (raw.I >= 0) req.item_params["I"] = raw.I;
    if (raw.M >= 0) req.item_params["M"] = raw.M;
    if (raw.K >= 0) req.item_params["K"] = raw.K;
    if (raw.n >= 0) req.item_params["n"] = raw.n;
    if (raw.k >= 0) req.item_params["k"] = raw.k;
    if (raw.p >= 0) req.item_params["p"] = raw.p;
    if (raw.n_max >= 0) req.item_params["n_max"] = raw.n_max;

    findyn::RunResult result = findyn::run_request_catching(req);
    if (!result.diagnostic.empty()) std::cerr << "error: " << result.diagnostic << "\n";
    if (!result.artifact.empty()) {
        if (raw.out_path.empty()) {
            std::cout << result.artifact;
        } else {
            try {
                findyn::write_text_file(raw.out_path, result.artifact);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return findyn::exit_input;
            }
        }
    }
    return result.exit_code;
}
