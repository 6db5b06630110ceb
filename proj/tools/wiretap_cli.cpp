// Experiment CLI: power allocation for secrecy and covert transmission over
// the four-node jammer-assisted wiretap channel.
//
// Subcommands:
//   secrecy-opt  run the iterative power allocation and report rho*, the
//                rate lower bound and a Monte Carlo estimate at rho*
//   covert-opt   solve the covertness-constrained allocation per epsilon
//   sweep        run the configured parameter sweep and emit CSV
//   verify       run the oracle cross-validation suite
//
// Exit codes: 0 ok, 1 config error, 2 infeasible.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wiretap/experiment.hpp"
#include "wiretap/oracle.hpp"

namespace {

using wiretap::experiment::ExperimentConfig;

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--preset", o.preset, "named preset (table1)")
        ->check(CLI::IsMember({"table1"}));
    cmd->add_option("--seed", o.seed, "RNG seed override");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials override");
    cmd->add_option("--out", o.out, "output path override");
}

ExperimentConfig load_config(const CommonOpts& o) {
    ExperimentConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in)
            throw std::invalid_argument("cannot read config file: " +
                                        o.config_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        cfg = wiretap::experiment::parse_config(ss.str());
    } else if (o.preset == "table1") {
        cfg = wiretap::experiment::table1_preset();
    } else {
        throw std::invalid_argument("provide --config or --preset table1");
    }
    if (o.seed) cfg.seed = *o.seed;
    if (o.trials) cfg.trials = *o.trials;
    if (o.out) cfg.out = *o.out;
    cfg.validate();
    return cfg;
}

int run_secrecy_opt(const ExperimentConfig& cfg) {
    const auto opt = wiretap::secrecy::sca_optimize(cfg.scenario, cfg.sca);
    const auto mc = wiretap::secrecy::ergodic_secrecy_rate_mc(
        cfg.scenario, {opt.rho_star}, cfg.trials, cfg.seed);
    using wiretap::experiment::format_g12;
    std::cout << "rho_star=" << format_g12(opt.rho_star)
              << " rate_lb=" << format_g12(opt.objective)
              << " rate_mc=" << format_g12(mc.mean)
              << " rate_mc_se=" << format_g12(mc.std_error)
              << " converged=" << (opt.converged ? 1 : 0)
              << " iters=" << opt.iterates.size() - 1 << '\n';
    return 0;
}

int run_covert_opt(const ExperimentConfig& cfg) {
    using wiretap::experiment::format_g12;
    for (double eps : cfg.epsilons) {
        wiretap::covert::CovertConfig cc{eps, cfg.bisect_tol,
                                         cfg.oracle_rho_points};
        const auto opt = wiretap::covert::covert_optimize(cfg.scenario, cc);
        const auto mc = wiretap::covert::covert_ergodic_rate_mc(
            cfg.scenario, {opt.rho_star}, cfg.trials, cfg.seed);
        std::cout << "epsilon=" << format_g12(eps)
                  << " rho_star=" << format_g12(opt.rho_star)
                  << " rate_lb=" << format_g12(opt.objective)
                  << " rate_mc=" << format_g12(mc.mean)
                  << " rate_mc_se=" << format_g12(mc.std_error) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy / covert rate power allocation experiments"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* sec = app.add_subcommand("secrecy-opt",
                                   "maximize the secrecy rate lower bound");
    auto* cov = app.add_subcommand("covert-opt",
                                   "maximize the covert rate under the "
                                   "covertness constraint");
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep to CSV");
    auto* verify =
        app.add_subcommand("verify", "run the oracle verification suite");
    for (auto* cmd : {sec, cov, sweep, verify}) add_common(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            const std::uint64_t seed = opts.seed.value_or(1);
            return wiretap::experiment::run_verify(std::cout, seed) ? 0 : 1;
        }
        const ExperimentConfig cfg = load_config(opts);
        if (sec->parsed()) return run_secrecy_opt(cfg);
        if (cov->parsed()) return run_covert_opt(cfg);
        const auto out = wiretap::experiment::run_experiment(cfg);
        for (const auto& f : out.files) std::cout << "wrote " << f << '\n';
        std::cout << out.summary;
        return 0;
    } catch (const wiretap::covert::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
