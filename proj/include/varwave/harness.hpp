#pragma once

#include "varwave/config.hpp"

#include <filesystem>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace varwave {

/// Speed model selected by the config, or the scenario's default.
WaveSpeedModel model_from_config(const SimConfig& cfg);

/// Checks that apply to a run when the config does not list them: hlem always;
/// energy (and the ledger with rk4) on the semidiscrete scheme; the invariant
/// domain, L^p and hi_alpha monotonicity only for nonpositive data under a
/// monotone speed.
std::set<Check> default_checks(const SimConfig& cfg, const StateRS& state0, const WaveSpeedModel& model);

struct RunResult {
    Grid grid;
    WaveSpeedModel model;
    ScenarioData initial;
    Trajectory trajectory;
    std::vector<CheckResult> checks;
    std::vector<std::filesystem::path> files;
    /// Human readable notes, e.g. a non-monotone speed.
    std::vector<std::string> warnings;

    bool all_passed() const;
};

struct RunOptions {
    bool write_files = true;
    bool write_snapshots = true;
};

/// Builds the scenario, integrates it with the configured scheme, evaluates
/// the checks and (optionally) writes series.csv and snapshot_<t>.csv into
/// cfg.output_dir. Module errors propagate.
RunResult run_simulation(const SimConfig& cfg, const RunOptions& options = {});

struct RefinementReport {
    struct Level {
        std::size_t n_cells;
        double dx;
    };
    std::vector<Level> levels;
    /// L^2 distance between u at t_end on consecutive levels, on the coarser grid.
    std::vector<double> pairwise_l2_u;
    /// Mean of log2(d_k / d_{k+1}) over consecutive distances.
    double observed_order = 0.0;
    std::vector<double> hi_alpha_per_level;
    /// Edge values of u at t_end per level.
    std::vector<std::vector<double>> u_final;
};

/// Runs the config at n_cells * 2^k, k = 0..levels-1 and compares u at t_end
/// by sampling every second edge of the finer grid. Needs levels >= 3.
RefinementReport refinement_study(const SimConfig& cfg, std::size_t levels);

/// L^2 distance on the coarse edges between a coarse edge field and a field
/// on the twice-refined grid.
double coarse_l2_distance(const std::vector<double>& coarse, const std::vector<double>& fine, double dx_coarse);

void write_series_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records);
void write_snapshot_csv(std::ostream& out, const Grid& grid, const Snapshot& snap);
void write_refinement_csv(std::ostream& out, const RefinementReport& report);
std::string snapshot_file_name(double t);

}  // namespace varwave
