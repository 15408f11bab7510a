#pragma once

#include "varwave/diagnostics.hpp"
#include "varwave/rhs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace varwave {

enum class Method { euler, rk4 };

Method parse_method(const std::string& name);
std::string to_string(Method m);

struct IntegrateOptions {
    Strategy strategy = Strategy::exact_f;
    Method method = Method::rk4;
    double cfl = 0.45;
    double u_left = 0.0;
    DiagnosticsConfig diag;
    /// Times at which the step is clipped so the state lands exactly on them.
    std::vector<double> stop_times;
    bool keep_states = false;
};

/// State and edge values of u at one instant.
struct Snapshot {
    StateRS state;
    std::vector<double> u_half;
};

struct Trajectory {
    std::vector<DiagnosticsRecord> records;
    /// Every accepted state, only when keep_states is set.
    std::vector<StateRS> states;
    /// States at the requested stop times, in increasing time order.
    std::vector<Snapshot> snapshots;
    Snapshot final;
    double dt = 0.0;
    std::size_t steps = 0;
};

/// Fixed step dt = cfl dx / max_k c_{k-1/2}(state0); the last step before each
/// stop time is shortened. Dissipation is integrated with the stepper's own
/// quadrature weights. Throws BlowupDetected when max(|R|, |S|) exceeds 1e6
/// times its initial value or leaves the finite range.
Trajectory integrate(const StateRS& state0, double t_end, const Grid& grid,
                     const WaveSpeedModel& model, const IntegrateOptions& options);

/// Largest value max(|R|, |S|) may reach before a run is declared blown up.
double blowup_threshold(const StateRS& state0);

}  // namespace varwave
