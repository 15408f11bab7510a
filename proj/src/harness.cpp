#include "varwave/harness.hpp"

#include "varwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace varwave {

WaveSpeedModel model_from_config(const SimConfig& cfg) {
    if (!cfg.model) {
        return default_model(cfg.scenario.name);
    }
    if (*cfg.model == "arctan") return WaveSpeedModel::arctan();
    if (*cfg.model == "liquid_crystal") return WaveSpeedModel::liquid_crystal(cfg.model_alpha, cfg.model_beta);
    if (*cfg.model == "constant") return WaveSpeedModel::constant(cfg.model_c0);
    throw PreconditionError("unknown model '" + *cfg.model + "'");
}

namespace {

bool nonpositive(const StateRS& s) {
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.R[j] > 0.0 || s.S[j] > 0.0) return false;
    }
    return true;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << body;
}

}  // namespace

std::set<Check> default_checks(const SimConfig& cfg, const StateRS& state0, const WaveSpeedModel& model) {
    std::set<Check> checks{Check::hlem};
    if (cfg.scheme == Scheme::semidiscrete) {
        checks.insert(Check::energy);
        if (cfg.method == Method::rk4) {
            checks.insert(Check::ledger);
        }
        if (nonpositive(state0) && model.monotone()) {
            checks.insert(Check::invariant_domain);
            checks.insert(Check::lp_monotone);
            checks.insert(Check::hi_alpha_monotone);
        }
    }
    return checks;
}

bool RunResult::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

RunResult run_simulation(const SimConfig& cfg, const RunOptions& options) {
    const Grid grid = make_grid(cfg.x_min, cfg.x_max, cfg.n_cells);
    const WaveSpeedModel model = model_from_config(cfg);
    ScenarioData initial = build_scenario(cfg.scenario, grid, model);

    RunResult result{grid, model, initial, {}, {}, {}, {}};
    if (!model.monotone()) {
        result.warnings.push_back("speed model " + model.name() +
                                  " has c' changing sign; the convergence hypotheses do not hold");
    }
    bool nonpos = nonpositive(initial.state);
    if (!nonpos) {
        result.warnings.push_back("initial data take positive values; the invariant-domain and L^p bounds do not apply");
    }

    DiagnosticsConfig diag = cfg.diag;
    diag.enabled_checks = cfg.checks.value_or(default_checks(cfg, initial.state, model));
    std::vector<double> stops = options.write_snapshots ? cfg.snapshot_times : std::vector<double>{};

    if (cfg.scheme == Scheme::semidiscrete) {
        IntegrateOptions opts;
        opts.strategy = cfg.strategy;
        opts.method = cfg.method;
        opts.cfl = cfg.effective_cfl();
        opts.u_left = initial.u_left;
        opts.diag = diag;
        opts.stop_times = stops;
        result.trajectory = integrate(initial.state, cfg.t_end, grid, model, opts);
    } else {
        ExplicitOptions opts;
        opts.u_update = cfg.u_update;
        opts.cfl = cfg.effective_cfl();
        opts.dt_over_dx = cfg.dt_over_dx;
        opts.allow_supercritical = cfg.allow_supercritical;
        opts.u_left = initial.u_left;
        opts.diag = diag;
        opts.stop_times = stops;
        FullState fs0{initial.state, initial.u_half, 0};
        result.trajectory = integrate_explicit(fs0, cfg.t_end, grid, model, opts);
    }

    const double M = cfg.invariant_m.value_or(std::max(initial.state.max_abs(), 1e-300));
    result.checks = evaluate_checks(result.trajectory.records, diag.enabled_checks, M, grid);

    if (options.write_files) {
        const std::filesystem::path dir(cfg.output_dir);
        std::filesystem::create_directories(dir);
        std::ostringstream series;
        write_series_csv(series, result.trajectory.records);
        write_file(dir / "series.csv", series.str());
        result.files.push_back(dir / "series.csv");
        for (const auto& snap : result.trajectory.snapshots) {
            std::ostringstream body;
            write_snapshot_csv(body, grid, snap);
            const auto path = dir / snapshot_file_name(snap.state.t);
            write_file(path, body.str());
            result.files.push_back(path);
        }
    }
    return result;
}

double coarse_l2_distance(const std::vector<double>& coarse, const std::vector<double>& fine, double dx_coarse) {
    if (fine.size() != 2 * (coarse.size() - 1) + 1) {
        throw PreconditionError("coarse_l2_distance: fine field is not a single refinement of the coarse one");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const double d = coarse[k] - fine[2 * k];
        sum += d * d;
    }
    return std::sqrt(dx_coarse * sum);
}

RefinementReport refinement_study(const SimConfig& cfg, std::size_t levels) {
    if (levels < 3) {
        throw PreconditionError("refinement_study needs at least 3 levels");
    }
    RefinementReport report;
    for (std::size_t k = 0; k < levels; ++k) {
        SimConfig level_cfg = cfg;
        level_cfg.n_cells = cfg.n_cells << k;
        const RunResult run = run_simulation(level_cfg, RunOptions{false, false});
        report.levels.push_back({level_cfg.n_cells, run.grid.dx});
        report.hi_alpha_per_level.push_back(run.trajectory.records.back().hi_alpha);
        report.u_final.push_back(run.trajectory.final.u_half);
    }
    double order_sum = 0.0;
    for (std::size_t k = 0; k + 1 < levels; ++k) {
        report.pairwise_l2_u.push_back(
            coarse_l2_distance(report.u_final[k], report.u_final[k + 1], report.levels[k].dx));
    }
    for (std::size_t k = 0; k + 1 < report.pairwise_l2_u.size(); ++k) {
        order_sum += std::log2(report.pairwise_l2_u[k] / report.pairwise_l2_u[k + 1]);
    }
    report.observed_order = order_sum / static_cast<double>(report.pairwise_l2_u.size() - 1);
    return report;
}

void write_series_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records) {
    out << "t,energy,l1,l3,diss_cum,r_max,s_max,r_min,s_min,hlem_residual_max,hi_alpha\n";
    out << std::setprecision(17);
    for (const auto& r : records) {
        out << r.t << ',' << r.energy << ',' << r.l1 << ',' << r.l3 << ',' << r.diss_cum << ',' << r.r_max << ','
            << r.s_max << ',' << r.r_min << ',' << r.s_min << ',' << r.hlem_residual_max << ',' << r.hi_alpha
            << '\n';
    }
}

void write_snapshot_csv(std::ostream& out, const Grid& grid, const Snapshot& snap) {
    // u lives on edges; each row carries the mean of the cell's two edges.
    out << "x,u,R,S\n";
    out << std::setprecision(17);
    for (std::size_t j = 0; j < snap.state.size(); ++j) {
        const double u = 0.5 * (snap.u_half[j] + snap.u_half[j + 1]);
        out << grid.center(j) << ',' << u << ',' << snap.state.R[j] << ',' << snap.state.S[j] << '\n';
    }
}

void write_refinement_csv(std::ostream& out, const RefinementReport& report) {
    out << "n_cells,dx,pairwise_l2_u,hi_alpha\n";
    out << std::setprecision(17);
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
        out << report.levels[k].n_cells << ',' << report.levels[k].dx << ',';
        if (k < report.pairwise_l2_u.size()) {
            out << report.pairwise_l2_u[k];
        }
        out << ',' << report.hi_alpha_per_level[k] << '\n';
    }
}

std::string snapshot_file_name(double t) {
    std::ostringstream name;
    name << "snapshot_" << t << ".csv";
    return name.str();
}

}  // namespace varwave
