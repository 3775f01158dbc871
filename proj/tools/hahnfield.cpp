#include <CLI11.hpp>

#include "hahn/analytic.hpp"
#include "hahn/errors.hpp"
#include "hahn/explog.hpp"
#include "hahn/json_io.hpp"
#include "hahn/parser.hpp"
#include "hahn/sampling.hpp"
#include "hahn/towers.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

struct GlobalOpts {
    long trunc_terms = 64;
    long taylor_order = 8;
    long const_precision = 64;
    std::string h_name = "boot";
    bool json = false;
    unsigned long long seed = 0;
};

hahn::EvalOptions eval_options(const GlobalOpts& g) {
    hahn::EvalOptions o;
    o.ctx.max_terms = g.trunc_terms;
    o.ctx.taylor_order = g.taylor_order;
    o.ctx.const_precision = g.const_precision;
    o.h = hahn::make_h(g.h_name);
    return o;
}

void print_value(const hahn::Value& v, const GlobalOpts& g) {
    if (g.json) {
        if (auto* s = std::get_if<hahn::Series>(&v)) {
            std::cout << hahn::series_to_json(*s).dump(2) << "\n";
            return;
        }
        std::cout << nlohmann::json{{"result", hahn::render(v)}}.dump(2) << "\n";
        return;
    }
    std::cout << hahn::render(v) << "\n";
}

int run_expr(const std::string& text, const GlobalOpts& g,
             const std::string& wrap = "") {
    hahn::EvalOptions opts = eval_options(g);
    std::string full = wrap.empty() ? text : wrap + "(" + text + ")";
    print_value(hahn::eval(hahn::parse(full), opts), g);
    return 0;
}

int run_check_growth(const GlobalOpts& g, long n_samples) {
    hahn::EvalOptions opts = eval_options(g);
    hahn::Sampler sampler(g.seed);
    std::vector<hahn::Series> samples;
    // Stratified: infinite positives for the log checks, plus finite and
    // infinitesimal points exercising the remaining h branches.
    for (long i = 0; i < n_samples; ++i) {
        switch (i % 4) {
            case 0: samples.push_back(sampler.purely_infinite()); break;
            case 1: samples.push_back(hahn::Series::rational(sampler.nonzero_rational())); break;
            case 2: samples.push_back(sampler.infinitesimal()); break;
            default: samples.push_back(hahn::negate(sampler.purely_infinite())); break;
        }
    }
    std::vector<hahn::Constant> rs = {hahn::Constant(hahn::Rational(1, 2)),
                                      hahn::Constant(hahn::Rational(1, 3))};
    hahn::GrowthReport report = hahn::check_growth(opts.h, samples, rs, opts.ctx);
    if (g.json) {
        std::cout << hahn::growth_report_to_json(report).dump(2) << "\n";
        return 0;
    }
    for (const auto& e : report.h_checks) {
        if (e.status == 1) continue;
        std::cout << (e.status == 0 ? "violation" : "inconclusive") << ": h(x) vs w^x at x = "
                  << e.x.to_text() << (e.note.empty() ? "" : " (" + e.note + ")") << "\n";
    }
    for (const auto& e : report.log_checks) {
        if (e.status == 1) continue;
        std::cout << (e.status == 0 ? "violation" : "inconclusive") << ": log(y) vs y^"
                  << e.r.to_text() << " at y = " << e.y.to_text()
                  << (e.note.empty() ? "" : " (" + e.note + ")") << "\n";
    }
    std::cout << "checked " << report.h_checks.size() << " h-samples and "
              << report.log_checks.size() << " log pairs\n";
    std::cout << "violations: " << report.violations() << "\n";
    return 0;
}

int run_omin(const GlobalOpts& g, const std::string& x_text) {
    hahn::EvalOptions opts = eval_options(g);
    hahn::Series x = hahn::eval_series(hahn::parse(x_text), opts);
    auto w = hahn::omin_witness(opts.h, x, opts.ctx);
    if (g.json) {
        nlohmann::json j;
        if (w) j = {{"y", w->y.to_text()}, {"n", w->n}};
        else j = {{"witness", nullptr}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (w)
        std::cout << "y = " << w->y.to_text() << ", n = " << w->n << "\n";
    else
        std::cout << "none\n";
    return 0;
}

int run_tower(const GlobalOpts& g, const std::string& mode, const std::string& base_spec,
              long stages, long samples) {
    hahn::BaseChain base = hahn::make_base(base_spec);
    if (mode == "no-omega") {
        hahn::NoOmegaReport report =
            hahn::no_omega_verdict(base, stages, samples, g.seed);
        if (g.json) {
            std::cout << hahn::no_omega_to_json(report).dump(2) << "\n";
        } else {
            for (const auto& line : report.trace) std::cout << line << "\n";
        }
        return 0;
    }
    if (mode != "eta" && mode != "iota") throw hahn::Error("unknown tower mode " + mode);
    bool iota = mode == "iota";
    std::mt19937_64 rng(g.seed);
    hahn::StageState s = hahn::make_stage0(base, iota);
    nlohmann::json trace = nlohmann::json::array();
    for (long k = 1; k <= stages; ++k) {
        hahn::StageState prev = s;
        s = iota ? hahn::iota_step(s, rng, samples) : hahn::eta_step(s, rng, samples);
        long side = iota ? hahn::check_side_condition_step(prev, s, rng, samples) : 0;
        std::string line = "stage " + std::to_string(k) + ": " + s.gamma->label +
                           ", tags (" + hahn::to_string(s.gamma->cof) + ", " +
                           hahn::to_string(s.gamma->coinit) + "); checks passed on " +
                           std::to_string(samples) + " samples";
        if (iota) line += "; side-condition conclusions checked: " + std::to_string(side);
        if (g.json) trace.push_back(line);
        else std::cout << line << "\n";
    }
    if (g.json) std::cout << nlohmann::json{{"trace", trace}}.dump(2) << "\n";
    return 0;
}

int run_repl(const GlobalOpts& g) {
    hahn::EvalOptions opts = eval_options(g);
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line == "quit" || line == "exit") break;
        if (line.empty()) continue;
        try {
            print_value(hahn::eval(hahn::parse(line), opts), g);
        } catch (const hahn::Error& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for finite-support Hahn series"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    GlobalOpts g;
    app.add_option("--trunc-terms", g.trunc_terms, "maximum retained terms per product");
    app.add_option("--taylor-order", g.taylor_order, "truncation order for Taylor series");
    app.add_option("--const-precision", g.const_precision,
                   "bit budget for constant comparisons");
    app.add_option("--h", g.h_name, "chain isomorphism: h0, h1 or boot")
        ->check(CLI::IsMember({"h0", "h1", "boot"}));
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "random seed for sampling");

    std::string expr_text, x_text = "-1";
    std::string tower_mode = "iota", tower_base = "omega1xZ";
    long samples = 100, stages = 3;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", expr_text, "expression")->required();

    auto* log_cmd = app.add_subcommand("log", "logarithm of an expression");
    log_cmd->add_option("expr", expr_text, "expression")->required();

    auto* exp_cmd = app.add_subcommand("exp", "exponential of an expression");
    exp_cmd->add_option("expr", expr_text, "expression")->required();

    auto* growth_cmd = app.add_subcommand("check-growth", "test the growth axiom on samples");
    growth_cmd->add_option("--samples", samples, "number of samples");

    auto* omin_cmd = app.add_subcommand("omin-witness", "o-minimality failure witness");
    omin_cmd->add_option("--x", x_text, "point to test")->required();

    auto* tower_cmd = app.add_subcommand("tower", "finite-stage tower simulation");
    tower_cmd->add_option("--mode", tower_mode, "eta, iota or no-omega")
        ->check(CLI::IsMember({"eta", "iota", "no-omega"}));
    tower_cmd->add_option("--stages", stages, "number of successor stages");
    tower_cmd->add_option("--samples", samples, "samples per stage");
    tower_cmd->add_option("--base", tower_base, "base chain: finite:k, z or omega1xZ");

    auto* repl_cmd = app.add_subcommand("repl", "read expressions from stdin");

    // Global flags may appear after the subcommand.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_expr(expr_text, g);
        if (log_cmd->parsed()) return run_expr(expr_text, g, "log");
        if (exp_cmd->parsed()) return run_expr(expr_text, g, "exp");
        if (growth_cmd->parsed()) return run_check_growth(g, samples);
        if (omin_cmd->parsed()) return run_omin(g, x_text);
        if (tower_cmd->parsed()) return run_tower(g, tower_mode, tower_base, stages, samples);
        if (repl_cmd->parsed()) return run_repl(g);
    } catch (const hahn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
