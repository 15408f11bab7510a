#include "varwave/fulldiscrete.hpp"

#include "varwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace varwave {

UUpdate parse_u_update(const std::string& name) {
    if (name == "time" || name == "time_integrate") return UUpdate::time_integrate;
    if (name == "space" || name == "space_integrate") return UUpdate::space_integrate;
    throw PreconditionError("unknown u_update '" + name + "'");
}

std::string to_string(UUpdate u) {
    return u == UUpdate::time_integrate ? "time" : "space";
}

std::vector<double> update_u_time(const std::vector<double>& u_half, const StateRS& state_n,
                                  const StateRS& state_np1, double dt) {
    const std::size_t n = state_n.size();
    if (u_half.size() != n + 1 || state_np1.size() != n) {
        throw PreconditionError("update_u_time: inconsistent array sizes");
    }
    auto at = [n](const std::vector<double>& v, std::size_t idx, bool left) {
        // Edge k touches cells k - 1 and k; cells -1 and n are ghosts.
        if (left) return idx == 0 ? 0.0 : v[idx - 1];
        return idx == n ? 0.0 : v[idx];
    };
    std::vector<double> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double sum = at(state_n.R, k, true) + at(state_n.R, k, false) + at(state_np1.R, k, true) +
                           at(state_np1.R, k, false) + at(state_n.S, k, true) + at(state_n.S, k, false) +
                           at(state_np1.S, k, true) + at(state_np1.S, k, false);
        out[k] = u_half[k] + dt / 8.0 * sum;
    }
    return out;
}

std::vector<double> update_u_space(double u_left, const StateRS& state, const Grid& grid,
                                   const WaveSpeedModel& model) {
    return reconstruct_u(Strategy::balanced, model, state, grid, u_left);
}

CoefficientField explicit_coefficients(const FullState& fs, const Grid& grid, const WaveSpeedModel& model) {
    return compute_coefficients(Strategy::balanced, model, fs.u_half, fs.state, grid);
}

namespace {

double peak_speed(const CoefficientField& coeffs) {
    return *std::max_element(coeffs.c_half.begin(), coeffs.c_half.end());
}

FullState advance(const FullState& fs, const RhsEval& k, double dt, double t_next, const Grid& grid,
                  const WaveSpeedModel& model, const StepOptions& options) {
    const double courant = dt * peak_speed(k.coeffs) / grid.dx;
    if (!options.allow_supercritical && courant > 1.0) {
        std::ostringstream msg;
        msg << "CFL number " << courant << " exceeds 1 (dt = " << dt << ", dx = " << grid.dx << ")";
        throw CflViolation(msg.str());
    }
    FullState out;
    out.level = fs.level + 1;
    out.state = StateRS{t_next, fs.state.R, fs.state.S};
    for (std::size_t j = 0; j < fs.state.size(); ++j) {
        out.state.R[j] += dt * k.dR[j];
        out.state.S[j] += dt * k.dS[j];
    }
    const double m = out.state.max_abs();
    if (!out.state.finite() || m > options.blowup_threshold) {
        std::ostringstream msg;
        msg << "max(|R|, |S|) = " << m << " exceeds " << options.blowup_threshold << " at level " << out.level;
        throw BlowupDetected(msg.str());
    }
    if (options.u_update == UUpdate::time_integrate) {
        out.u_half = update_u_time(fs.u_half, fs.state, out.state, dt);
    } else {
        out.u_half = update_u_space(options.u_left, out.state, grid, model);
    }
    return out;
}

}  // namespace

FullState step_explicit(const FullState& fs, double dt, const Grid& grid, const WaveSpeedModel& model,
                        const StepOptions& options) {
    if (!(dt > 0.0)) {
        throw PreconditionError("step_explicit needs dt > 0");
    }
    const RhsEval k = upwind_rhs(fs.state, grid, explicit_coefficients(fs, grid, model));
    return advance(fs, k, dt, fs.state.t + dt, grid, model, options);
}

Trajectory integrate_explicit(const FullState& fs0, double t_end, const Grid& grid,
                              const WaveSpeedModel& model, const ExplicitOptions& options) {
    if (!(t_end > fs0.state.t)) {
        throw PreconditionError("integrate_explicit needs t_end after the initial time");
    }
    if (!options.dt_over_dx && !(options.cfl > 0.0 && options.cfl <= 1.0)) {
        throw PreconditionError("integrate_explicit needs 0 < cfl <= 1");
    }
    if (options.dt_over_dx && !(*options.dt_over_dx > 0.0)) {
        throw PreconditionError("dt_over_dx must be positive");
    }

    StepOptions step_opts{options.u_update, options.u_left, options.allow_supercritical,
                          blowup_threshold(fs0.state)};

    std::vector<double> stops;
    for (double s : options.stop_times) {
        if (s > fs0.state.t && s < t_end) stops.push_back(s);
    }
    stops.push_back(t_end);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    auto wanted = [&](double t) {
        return std::find(options.stop_times.begin(), options.stop_times.end(), t) != options.stop_times.end();
    };

    Trajectory traj;
    FullState fs = fs0;
    RhsEval k = upwind_rhs(fs.state, grid, explicit_coefficients(fs, grid, model));
    traj.dt = options.dt_over_dx ? *options.dt_over_dx * grid.dx : options.cfl * grid.dx / peak_speed(k.coeffs);

    DiagnosticsLog log(grid, options.diag);
    log.start(fs.state, k);
    if (wanted(fs.state.t)) traj.snapshots.push_back({fs.state, fs.u_half});

    for (double stop : stops) {
        while (fs.state.t < stop) {
            double h = std::min(traj.dt, stop - fs.state.t);
            bool at_stop = false;
            if (stop - fs.state.t - h <= 1e-12 * traj.dt) {
                h = stop - fs.state.t;
                at_stop = true;
            }
            const double t_next = at_stop ? stop : fs.state.t + h;
            const double diss_inc = h * dissipation(fs.state, k.coeffs, grid);
            fs = advance(fs, k, h, t_next, grid, model, step_opts);
            k = upwind_rhs(fs.state, grid, explicit_coefficients(fs, grid, model));
            ++traj.steps;
            log.advance(fs.state, k, h, diss_inc, at_stop && stop == t_end);
        }
        if (wanted(stop)) traj.snapshots.push_back({fs.state, fs.u_half});
    }
    traj.records = log.records();
    traj.final = {fs.state, fs.u_half};
    return traj;
}

}  // namespace varwave
