// Command line front end: run, refine, check, scenarios.

#include "varwave/errors.hpp"
#include "varwave/harness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

namespace {

using namespace varwave;

SimConfig load(const std::string& path) {
    SimConfig cfg = load_config(path);
    if (const char* dir = std::getenv("VARWAVE_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        cfg.output_dir = dir;
    }
    return cfg;
}

void print_header(const SimConfig& cfg, const RunResult& run) {
    std::cout << "scenario " << to_string(cfg.scenario.name) << ", model " << run.model.name() << ", scheme "
              << to_string(cfg.scheme);
    if (cfg.scheme == Scheme::semidiscrete) {
        std::cout << " (" << to_string(cfg.method) << ", " << to_string(cfg.strategy) << ")";
    } else {
        std::cout << " (u_update " << to_string(cfg.u_update) << ")";
    }
    std::cout << "\n  grid [" << cfg.x_min << ", " << cfg.x_max << "] x " << cfg.n_cells << ", dx = " << run.grid.dx
              << ", dt = " << run.trajectory.dt << ", steps = " << run.trajectory.steps << "\n";
    for (const auto& w : run.warnings) {
        std::cout << "  warning: " << w << "\n";
    }
}

bool print_checks(const std::vector<CheckResult>& checks) {
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << to_string(c.check) << ": " << c.detail << "\n";
        ok = ok && c.passed;
    }
    return ok;
}

/// Algebraic identities on seeded random nonpositive states.
bool random_state_checks(const SimConfig& cfg, const WaveSpeedModel& model) {
    const Grid grid = make_grid(cfg.x_min, cfg.x_max, cfg.n_cells);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(-1.0, 0.0);
    double chain_worst = 0.0;
    double hlem_worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        StateRS s = StateRS::zeros(grid);
        for (std::size_t j = 0; j < grid.n_cells; ++j) {
            s.R[j] = dist(rng);
            s.S[j] = dist(rng);
        }
        const double scale = s.max_abs();
        for (Strategy st : {Strategy::exact_f, Strategy::balanced, Strategy::march}) {
            const RhsEval ev = rhs(s, grid, model, st);
            const double chain = chain_rule_residual(ev.coeffs, s, grid) / (model.c_max() / grid.dx);
            const double hlem = hlem_residual(s, ev, grid) / (scale * scale * scale / grid.dx);
            chain_worst = std::max(chain_worst, chain);
            hlem_worst = std::max(hlem_worst, hlem);
            ok = ok && chain <= 1e-12 && hlem <= 1e-11;
        }
    }
    std::cout << "  [" << (chain_worst <= 1e-12 ? "PASS" : "FAIL") << "] chain_rule: worst " << chain_worst
              << " x c_max/dx over 20 random states\n";
    std::cout << "  [" << (hlem_worst <= 1e-11 ? "PASS" : "FAIL") << "] hlem_random: worst " << hlem_worst
              << " x scale^3/dx over 20 random states\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Upwind schemes for the variational wave equation in Riemann-invariant form"};
    app.require_subcommand(1);

    std::string config_path;
    bool allow_supercritical = false;
    std::size_t levels = 3;

    auto* run_cmd = app.add_subcommand("run", "Integrate a configured scenario and write CSV output");
    run_cmd->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    run_cmd->add_flag("--allow-supercritical", allow_supercritical, "Skip the CFL guard of the explicit scheme");

    auto* refine_cmd = app.add_subcommand("refine", "Grid refinement study");
    refine_cmd->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    refine_cmd->add_option("--levels", levels, "Number of grid levels (>= 3)")->required();

    auto* check_cmd = app.add_subcommand("check", "Run the invariant checks only");
    check_cmd->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

    auto* scenarios_cmd = app.add_subcommand("scenarios", "List built-in scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (scenarios_cmd->parsed()) {
            for (ScenarioName name : all_scenarios()) {
                std::cout << to_string(name) << "\n    " << scenario_description(name) << "\n    parameters:";
                for (const auto& [key, value] : scenario_parameters(name)) {
                    std::cout << " " << key << "=" << value;
                }
                std::cout << "\n";
            }
            return 0;
        }

        SimConfig cfg = load(config_path);
        if (run_cmd->parsed()) {
            cfg.allow_supercritical = cfg.allow_supercritical || allow_supercritical;
            const RunResult run = run_simulation(cfg);
            print_header(cfg, run);
            for (const auto& f : run.files) {
                std::cout << "  wrote " << f.string() << "\n";
            }
            return print_checks(run.checks) ? 0 : 1;
        }
        if (check_cmd->parsed()) {
            const RunResult run = run_simulation(cfg, RunOptions{true, false});
            print_header(cfg, run);
            const bool traj_ok = print_checks(run.checks);
            const bool algebra_ok = random_state_checks(cfg, run.model);
            return traj_ok && algebra_ok ? 0 : 1;
        }
        if (refine_cmd->parsed()) {
            const RefinementReport report = refinement_study(cfg, levels);
            std::filesystem::create_directories(cfg.output_dir);
            const auto path = std::filesystem::path(cfg.output_dir) / "refinement.csv";
            std::ofstream out(path);
            write_refinement_csv(out, report);
            std::cout << std::setprecision(6);
            for (std::size_t k = 0; k < report.levels.size(); ++k) {
                std::cout << "  n = " << std::setw(6) << report.levels[k].n_cells << "  hi_alpha = "
                          << report.hi_alpha_per_level[k];
                if (k < report.pairwise_l2_u.size()) {
                    std::cout << "  |u_n - u_2n| = " << report.pairwise_l2_u[k];
                }
                std::cout << "\n";
            }
            std::cout << "  observed order " << report.observed_order << "\n  wrote " << path.string() << "\n";
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error in " << config_path << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
