// holdercover: Hölder curve covers, corner-replacement fractals and Jones beta sums.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "holdercover/app.hpp"

using holdercover::Command;
using holdercover::RunConfig;

namespace {

void construction_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--gamma", cfg.gamma, "gamma as p/q, 1/2 < gamma < 1");
    sub->add_option("--delta", cfg.delta, "delta as p/q, 1/2 < delta <= gamma");
    sub->add_option("--stages", cfg.stages, "number of (2n+1)-stages M");
    sub->add_option("--variant", cfg.variant, "printed or corrected");
}

void output_flag(CLI::App* sub, RunConfig& cfg) { sub->add_option("--out", cfg.output, "output path (default stdout)"); }

void chain_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--input", cfg.input, "point-cloud JSON")->required();
    sub->add_option("--eps0", cfg.eps0, "root radius");
    sub->add_option("--levels", cfg.chain_levels, "number of levels K below the root");
    sub->add_option("--d", cfg.d, "Dini exponent d >= 1");
}

CLI::App* schedule_cmd(CLI::App& parent, const std::string& name, RunConfig& cfg) {
    auto* sub = parent.add_subcommand(name, "exact scale schedule and side exponents as JSON");
    construction_flags(sub, cfg);
    output_flag(sub, cfg);
    sub->callback([&cfg] { cfg.command = Command::schedule; });
    return sub;
}

CLI::App* corners_cmd(CLI::App& parent, const std::string& name, RunConfig& cfg) {
    auto* sub = parent.add_subcommand(name, "corner point cloud of generation --depth");
    construction_flags(sub, cfg);
    sub->add_option("--depth", cfg.depth, "generation depth");
    sub->add_flag("--primed", cfg.primed, "use the delta family K'");
    output_flag(sub, cfg);
    sub->callback([&cfg] { cfg.command = Command::corners; });
    return sub;
}

CLI::App* bnv_cmd(CLI::App& parent, RunConfig& cfg) {
    auto* sub = parent.add_subcommand("bnv", "per-level counts of squares with beta >= beta0");
    sub->add_option("--input", cfg.input, "point-cloud JSON")->required();
    sub->add_option("--beta0", cfg.beta0, "flatness threshold");
    sub->add_option("--d", cfg.d, "exponent d");
    sub->add_option("--levels", cfg.levels, "levels 0:K");
    output_flag(sub, cfg);
    sub->callback([&cfg] { cfg.command = Command::bnv; });
    return sub;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Hölder curve covers and corner-replacement fractal diagnostics", "holdercover"};
    app.require_subcommand(1);
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--budget", cfg.budget, "maximum number of points")->capture_default_str();
    app.add_option("--precision-bits", cfg.precision_bits, "MPFR precision limit for log_4 ceilings");
    app.add_option("--format", cfg.format, "json or csv where both exist");

    auto* cantor = app.add_subcommand("cantor", "corner-replacement construction");
    cantor->require_subcommand(1);
    schedule_cmd(*cantor, "schedule", cfg);
    corners_cmd(*cantor, "corners", cfg);
    schedule_cmd(app, "schedule", cfg);
    corners_cmd(app, "corners", cfg);

    auto* chain = app.add_subcommand("chain", "multiscale cover chain as JSON");
    chain_flags(chain, cfg);
    output_flag(chain, cfg);
    chain->callback([&cfg] { cfg.command = Command::chain; });

    auto* curve = app.add_subcommand("curve", "Hölder curve through every cover-ball center");
    chain_flags(curve, cfg);
    curve->add_option("--svg", cfg.svg, "write an SVG polyline");
    curve->add_option("--tree", cfg.tree_out, "write the cover tree JSON");
    curve->add_option("--stroke-width", cfg.stroke_width, "SVG stroke width");
    output_flag(curve, cfg);
    curve->callback([&cfg] { cfg.command = Command::curve; });

    auto* beta = app.add_subcommand("beta", "Jones beta numbers");
    beta->require_subcommand(1);
    auto* sum = beta->add_subcommand("sum", "beta(3Q)^2 side(Q) over dyadic squares");
    sum->add_option("--input", cfg.input, "point-cloud JSON")->required();
    sum->add_option("--levels", cfg.levels, "level range a:b");
    output_flag(sum, cfg);
    sum->callback([&cfg] {
        cfg.command = Command::beta;
        if (cfg.format == "json") cfg.format = "csv";
    });
    bnv_cmd(*beta, cfg);
    bnv_cmd(app, cfg);

    auto* dini = app.add_subcommand("dini", "Dini partial sums of N_k 2^{-kd}");
    dini->add_option("--input", cfg.input, "point-cloud JSON (counts from the cover chain)");
    dini->add_option("--counts", cfg.counts, "comma-separated N_0,N_1,...");
    dini->add_option("--eps0", cfg.eps0, "root radius");
    dini->add_option("--levels", cfg.chain_levels, "chain levels");
    dini->add_option("--d", cfg.d, "exponent d");
    output_flag(dini, cfg);
    dini->callback([&cfg] { cfg.command = Command::dini; });

    auto* dims = app.add_subcommand("dims", "covering-number brackets and box-dimension fits");
    dims->add_option("--input", cfg.input, "point-cloud JSON")->required();
    dims->add_option("--levels", cfg.levels, "eps = 2^{-j} for j in a:b");
    output_flag(dims, cfg);
    dims->callback([&cfg] { cfg.command = Command::dims; });

    auto* check = app.add_subcommand("check", "exact analytic tables for the construction");
    check->add_option("name", cfg.check, "eq5, lemma31, lemma32, lemma33, eq4, disjoint or all");
    construction_flags(check, cfg);
    output_flag(check, cfg);
    check->callback([&cfg] { cfg.command = Command::check; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return holdercover::kExitValidation;
    }

    if (const char* env = std::getenv("HOLDERCOVER_BUDGET")) {
        try {
            cfg.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: HOLDERCOVER_BUDGET must be a positive integer\n";
            return holdercover::kExitValidation;
        }
    }
    return holdercover::run(cfg, std::cout, std::cerr);
}
