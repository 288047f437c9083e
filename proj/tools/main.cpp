// Command-line front end: simulate trajectories, analyze equilibria,
// sweep parameter regions and reproduce the published reference cases.
//
// Exit codes: 0 success, 1 usage/config error, 2 diverged integration,
// 3 internal numerical failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fractoda/app.hpp"

namespace {

using namespace fractoda;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitNumerical = 3;

State5 parse_perturbation(const std::string& text) {
    State5 v;
    std::istringstream in(text);
    std::string item;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!std::getline(in, item, ',')) {
            throw ConfigError("--perturb expects five comma-separated numbers");
        }
        try {
            v[i] = std::stod(item);
        } catch (const std::exception&) {
            throw ConfigError("--perturb: malformed number '" + item + "'");
        }
    }
    if (std::getline(in, item, ',')) {
        throw ConfigError("--perturb expects exactly five numbers");
    }
    return v;
}

struct FlagOverrides {
    std::optional<double> a, b, c1, c2, c3, q, k, m, h, epsilon;
    std::optional<long long> steps;
    std::optional<std::string> out;
    std::optional<bool> controlled;

    void apply(RunConfig& cfg) const {
        if (a) cfg.params.a = *a;
        if (b) cfg.params.b = *b;
        if (c1) cfg.params.c1 = *c1;
        if (c2) cfg.params.c2 = *c2;
        if (c3) cfg.params.c3 = *c3;
        if (q) cfg.params.q = *q;
        if (k) cfg.target.k = *k;
        if (m) cfg.target.m = *m;
        if (h) cfg.integ.h = *h;
        if (steps) cfg.integ.steps = *steps;
        if (epsilon) cfg.integ.epsilon = *epsilon;
        if (out) cfg.out = *out;
        if (controlled) cfg.controlled = *controlled;
    }
};

void add_override_options(CLI::App* sub, FlagOverrides& ov) {
    sub->set_help_flag("--help", "print help");  // frees -h for the step-size override
    sub->add_option("--a", ov.a, "override parameter a");
    sub->add_option("--b", ov.b, "override parameter b");
    sub->add_option("--c1", ov.c1, "override gain c1");
    sub->add_option("--c2", ov.c2, "override gain c2");
    sub->add_option("--c3", ov.c3, "override gain c3");
    sub->add_option("--q", ov.q, "override fractional order q");
    sub->add_option("--k", ov.k, "override equilibrium coordinate k");
    sub->add_option("--m", ov.m, "override equilibrium coordinate m");
    sub->add_option("--h", ov.h, "override step size h");
    sub->add_option("--N", ov.steps, "override step count N");
    sub->add_option("--epsilon", ov.epsilon, "override perturbation magnitude");
    sub->add_option("--out", ov.out, "override output path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"fractional-order Toda lattice: simulation and stability analysis"};
    cli.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- simulate ----
    auto* simulate = cli.add_subcommand("simulate", "integrate one trajectory, write CSV/SVG");
    std::string sim_config;
    std::optional<std::string> sim_svg;
    std::optional<std::string> sim_perturb;
    bool sim_uncontrolled = false;
    FlagOverrides sim_ov;
    simulate->add_option("--config", sim_config, "key=value configuration file")->required();
    simulate->add_option("--svg", sim_svg, "prefix for the five orbit SVG files");
    simulate->add_option("--perturb", sim_perturb,
                         "initial offset as five comma-separated numbers (replaces epsilon)");
    simulate->add_flag("--uncontrolled", sim_uncontrolled, "integrate without feedback terms");
    add_override_options(simulate, sim_ov);
    simulate->callback([&] {
        RunConfig cfg = load_run_config(sim_config).config;
        sim_ov.apply(cfg);
        if (sim_uncontrolled) cfg.controlled = false;
        std::optional<State5> offset;
        if (sim_perturb) offset = parse_perturbation(*sim_perturb);

        const app::SimulateOutcome outcome = app::run_simulate(cfg, sim_svg, offset);
        std::cout << "wrote " << outcome.trajectory.states.size() << " rows to "
                  << outcome.csv_path << "\n";
        for (const std::string& p : outcome.svg_paths) std::cout << "wrote " << p << "\n";
        if (outcome.diverged) {
            std::cout << "diverged at step " << *outcome.trajectory.diverged_at
                      << "; CSV truncated there\n";
            exit_code = kExitDiverged;
        }
    });

    // ---- analyze ----
    auto* analyze = cli.add_subcommand("analyze", "stability report for one equilibrium");
    app::AnalyzeRequest areq;
    bool an_uncontrolled = false;
    analyze->add_option("--a", areq.params.a, "parameter a")->required();
    analyze->add_option("--b", areq.params.b, "parameter b")->required();
    analyze->add_option("--c1", areq.params.c1, "gain c1")->required();
    analyze->add_option("--c2", areq.params.c2, "gain c2")->required();
    analyze->add_option("--c3", areq.params.c3, "gain c3")->required();
    analyze->add_option("--k", areq.target.k, "equilibrium coordinate k")->required();
    analyze->add_option("--m", areq.target.m, "equilibrium coordinate m")->required();
    analyze->add_option("--q", areq.params.q, "fractional order q")->required();
    analyze->add_flag("--uncontrolled", an_uncontrolled, "analyze the system without feedback");
    analyze->callback([&] {
        areq.controlled = !an_uncontrolled;
        const app::AnalyzeReport rep = app::run_analyze(areq);
        app::print_analyze(std::cout, areq, rep);
    });

    // ---- sweep ----
    auto* sweep = cli.add_subcommand("sweep", "verdict grid over two parameter axes");
    std::string sweep_config;
    std::string axis1_text;
    std::string axis2_text;
    FlagOverrides sweep_ov;
    sweep->add_option("--config", sweep_config, "key=value configuration file")->required();
    sweep->add_option("--axis1", axis1_text, "first axis as field:lo:hi:count")->required();
    sweep->add_option("--axis2", axis2_text, "second axis as field:lo:hi:count")->required();
    add_override_options(sweep, sweep_ov);
    sweep->callback([&] {
        const ParsedConfig parsed = load_run_config(sweep_config);
        RunConfig cfg = parsed.config;
        sweep_ov.apply(cfg);
        std::string out_path = "sweep.csv";
        if (sweep_ov.out) out_path = *sweep_ov.out;
        else if (parsed.has("out")) out_path = cfg.out;

        const app::SweepAxis a1 = app::parse_sweep_axis(axis1_text);
        const app::SweepAxis a2 = app::parse_sweep_axis(axis2_text);
        const auto rows = app::run_sweep(cfg, a1, a2, app::sweep_threads());

        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot open '" + out_path + "' for writing");
        write_sweep_csv(out, a1.field, a2.field, rows);
        std::cout << "wrote " << rows.size() << " cells to " << out_path << "\n";
    });

    // ---- reproduce ----
    auto* reproduce = cli.add_subcommand("reproduce", "re-run one published reference case");
    std::string case_id;
    reproduce->add_option("id", case_id, "case id (3.1.1 .. 3.5.2, 4.1)")->required();
    reproduce->callback([&] {
        const app::ReproduceOutcome outcome = app::run_reproduce(case_id);
        app::print_reproduce(std::cout, outcome);
    });

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownExample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoConvergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return exit_code;
}
