#pragma once

#include "varwave/diagnostics.hpp"
#include "varwave/rhs.hpp"
#include "varwave/semidiscrete.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace varwave {

/// How u_{j+1/2} follows the explicit (R, S) update.
enum class UUpdate {
    time_integrate,   ///< trapezoid in time of u_t = (R + S) / 2 on the staggered edges
    space_integrate,  ///< balanced recurrence in x from the fixed left edge value
};

UUpdate parse_u_update(const std::string& name);
std::string to_string(UUpdate u);

struct FullState {
    StateRS state;
    std::vector<double> u_half;
    std::size_t level = 0;
};

struct StepOptions {
    UUpdate u_update = UUpdate::space_integrate;
    double u_left = 0.0;
    /// Skip the CFL guard, e.g. to rerun with dt = dx whatever the speed.
    bool allow_supercritical = false;
    /// Abort when max(|R|, |S|) exceeds this value.
    double blowup_threshold = std::numeric_limits<double>::infinity();
};

/// u^{n+1}_{j+1/2} = u^n_{j+1/2} + dt/8 (R^n_j + R^n_{j+1} + R^{n+1}_j + R^{n+1}_{j+1}
///                                       + S^n_j + S^n_{j+1} + S^{n+1}_j + S^{n+1}_{j+1})
/// with ghost cells zero.
std::vector<double> update_u_time(const std::vector<double>& u_half, const StateRS& state_n,
                                  const StateRS& state_np1, double dt);

/// u_{j+1/2} = u_{j-1/2} + dx (R_j - S_j) / (c(u_{j-1/2}) + c(u_{j+1/2})) from u_left.
std::vector<double> update_u_space(double u_left, const StateRS& state, const Grid& grid,
                                   const WaveSpeedModel& model);

/// Coefficients the explicit step uses at level n: speeds from fs.u_half and
/// tc from the divided difference of those speeds.
CoefficientField explicit_coefficients(const FullState& fs, const Grid& grid, const WaveSpeedModel& model);

/// One forward step of the upwind scheme followed by the selected u update.
/// Throws CflViolation when dt max_k c_{k-1/2} / dx > 1 (unless allowed) and
/// BlowupDetected when the new state is non-finite or exceeds the threshold.
FullState step_explicit(const FullState& fs, double dt, const Grid& grid, const WaveSpeedModel& model,
                        const StepOptions& options);

struct ExplicitOptions {
    UUpdate u_update = UUpdate::space_integrate;
    double cfl = 0.9;
    /// When set, dt = dt_over_dx * dx regardless of the speeds.
    std::optional<double> dt_over_dx;
    bool allow_supercritical = false;
    double u_left = 0.0;
    DiagnosticsConfig diag;
    std::vector<double> stop_times;
};

/// Repeats step_explicit until t_end. Without dt_over_dx the step is
/// cfl dx / max_k c_{k-1/2} at the initial level. The dissipation integral
/// uses the left-point rule, matching the forward step.
Trajectory integrate_explicit(const FullState& fs0, double t_end, const Grid& grid,
                              const WaveSpeedModel& model, const ExplicitOptions& options);

}  // namespace varwave
