#include "varwave/semidiscrete.hpp"

#include "varwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace varwave {

Method parse_method(const std::string& name) {
    if (name == "euler") return Method::euler;
    if (name == "rk4") return Method::rk4;
    throw PreconditionError("unknown time integrator '" + name + "'");
}

std::string to_string(Method m) {
    return m == Method::euler ? "euler" : "rk4";
}

RhsEval upwind_rhs(const StateRS& state, const Grid& grid, CoefficientField coeffs) {
    const std::size_t n = state.size();
    RhsEval out{std::vector<double>(n), std::vector<double>(n), std::move(coeffs)};
    const auto& c = out.coeffs.c_half;
    const auto& tc = out.coeffs.tc;
    for (std::size_t j = 0; j < n; ++j) {
        const double R = state.R[j];
        const double S = state.S[j];
        const double r_next = j + 1 < n ? state.R[j + 1] : 0.0;
        const double s_prev = j > 0 ? state.S[j - 1] : 0.0;
        const double source = tc[j] * (R * R - S * S);
        out.dR[j] = c[j + 1] * (r_next - R) / grid.dx + source;
        out.dS[j] = -c[j] * (S - s_prev) / grid.dx - source;
    }
    return out;
}

RhsEval rhs(const StateRS& state, const Grid& grid, const WaveSpeedModel& model, Strategy strategy,
            double u_left) {
    return upwind_rhs(state, grid, build_coefficients(strategy, model, state, grid, u_left));
}

double blowup_threshold(const StateRS& state0) {
    const double scale = state0.max_abs();
    return scale > 0.0 ? 1e6 * scale : std::numeric_limits<double>::infinity();
}

namespace {

StateRS axpy(const StateRS& y, double h, const RhsEval& k, double t) {
    StateRS out{t, y.R, y.S};
    for (std::size_t j = 0; j < y.size(); ++j) {
        out.R[j] += h * k.dR[j];
        out.S[j] += h * k.dS[j];
    }
    return out;
}

void guard_blowup(const StateRS& state, double threshold) {
    const double m = state.max_abs();
    if (!state.finite() || m > threshold) {
        std::ostringstream msg;
        msg << "max(|R|, |S|) = " << m << " exceeds " << threshold << " at t = " << state.t;
        throw BlowupDetected(msg.str());
    }
}

}  // namespace

Trajectory integrate(const StateRS& state0, double t_end, const Grid& grid,
                     const WaveSpeedModel& model, const IntegrateOptions& options) {
    if (!(options.cfl > 0.0 && options.cfl <= 1.0)) {
        throw PreconditionError("integrate needs 0 < cfl <= 1");
    }
    if (!(t_end > state0.t)) {
        throw PreconditionError("integrate needs t_end after the initial time");
    }
    if (state0.size() != grid.n_cells) {
        throw PreconditionError("state size does not match the grid");
    }

    std::vector<double> stops;
    for (double s : options.stop_times) {
        if (s > state0.t && s < t_end) {
            stops.push_back(s);
        }
    }
    stops.push_back(t_end);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    const bool snapshot_initial =
        std::find(options.stop_times.begin(), options.stop_times.end(), state0.t) != options.stop_times.end();

    const auto eval = [&](const StateRS& s) { return rhs(s, grid, model, options.strategy, options.u_left); };

    Trajectory traj;
    StateRS y = state0;
    RhsEval k1 = eval(y);
    const double c_peak = *std::max_element(k1.coeffs.c_half.begin(), k1.coeffs.c_half.end());
    traj.dt = options.cfl * grid.dx / c_peak;
    const double threshold = blowup_threshold(state0);

    DiagnosticsLog log(grid, options.diag);
    log.start(y, k1);
    if (options.keep_states) traj.states.push_back(y);
    if (snapshot_initial) traj.snapshots.push_back({y, k1.coeffs.u_half});

    for (double stop : stops) {
        while (y.t < stop) {
            double h = std::min(traj.dt, stop - y.t);
            bool at_stop = false;
            if (stop - y.t - h <= 1e-12 * traj.dt) {
                h = stop - y.t;
                at_stop = true;
            }
            const double t_next = at_stop ? stop : y.t + h;

            StateRS next;
            double diss_inc = 0.0;
            if (options.method == Method::euler) {
                next = axpy(y, h, k1, t_next);
                diss_inc = h * dissipation(y, k1.coeffs, grid);
            } else {
                const StateRS y2 = axpy(y, 0.5 * h, k1, y.t + 0.5 * h);
                const RhsEval k2 = eval(y2);
                const StateRS y3 = axpy(y, 0.5 * h, k2, y.t + 0.5 * h);
                const RhsEval k3 = eval(y3);
                const StateRS y4 = axpy(y, h, k3, t_next);
                const RhsEval k4 = eval(y4);
                next = StateRS{t_next, y.R, y.S};
                for (std::size_t j = 0; j < y.size(); ++j) {
                    next.R[j] += h / 6.0 * (k1.dR[j] + 2.0 * k2.dR[j] + 2.0 * k3.dR[j] + k4.dR[j]);
                    next.S[j] += h / 6.0 * (k1.dS[j] + 2.0 * k2.dS[j] + 2.0 * k3.dS[j] + k4.dS[j]);
                }
                diss_inc = h / 6.0 *
                           (dissipation(y, k1.coeffs, grid) + 2.0 * dissipation(y2, k2.coeffs, grid) +
                            2.0 * dissipation(y3, k3.coeffs, grid) + dissipation(y4, k4.coeffs, grid));
            }
            guard_blowup(next, threshold);
            y = std::move(next);
            k1 = eval(y);
            ++traj.steps;
            log.advance(y, k1, h, diss_inc, at_stop && stop == t_end);
            if (options.keep_states) traj.states.push_back(y);
        }
        if (std::find(options.stop_times.begin(), options.stop_times.end(), stop) != options.stop_times.end()) {
            traj.snapshots.push_back({y, k1.coeffs.u_half});
        }
    }
    traj.records = log.records();
    traj.final = {y, k1.coeffs.u_half};
    return traj;
}

}  // namespace varwave
