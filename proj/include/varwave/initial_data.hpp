#pragma once

#include "varwave/grid.hpp"
#include "varwave/wavespeed.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace varwave {

using RealFunction = std::function<double(double)>;

/// R_j = v_j + c(u_j) u'_j and S_j = v_j - c(u_j) u'_j with u_j = u0(x_j),
/// v_j the cell average of v0 and u'_j the cell average of u0'. Without an
/// explicit derivative, u'_j telescopes: (u0(x_{j+1/2}) - u0(x_{j-1/2})) / dx.
StateRS discretize_uv(const RealFunction& u0, const RealFunction& v0, const Grid& grid,
                      const WaveSpeedModel& model,
                      const std::optional<RealFunction>& u0_prime = std::nullopt);

enum class ScenarioName {
    gauss_rs,      ///< R = -2 exp(-(x-5)^2), S = +2 exp(-(x+5)^2), arctan speed
    gauss_rs_neg,  ///< same with S negated, so R, S <= 0
    glassey_pulse, ///< u = pi/4 + exp(-x^2), u_t = -c(u) u_x, liquid_crystal(1.5, 0.5)
    transport,     ///< R = -a exp(-(x-x0)^2 / w^2), S = 0, constant speed
};

/// Named initial condition plus numeric overrides (see scenario_parameters).
struct Scenario {
    ScenarioName name = ScenarioName::gauss_rs_neg;
    std::map<std::string, double> parameters;
};

ScenarioName parse_scenario_name(const std::string& name);
std::string to_string(ScenarioName name);
std::vector<ScenarioName> all_scenarios();
/// Default parameters of a scenario; overrides must use one of these keys.
std::map<std::string, double> scenario_parameters(ScenarioName name);
std::string scenario_description(ScenarioName name);
WaveSpeedModel default_model(ScenarioName name);

/// Discrete initial state together with what the scheme needs besides (R, S).
struct ScenarioData {
    StateRS state;
    WaveSpeedModel model;
    /// Value of u at the left boundary edge, held fixed in time.
    double u_left = 0.0;
    /// Initial edge values of u from the balanced recurrence, shared by
    /// both fully discrete u-updates.
    std::vector<double> u_half;
};

/// Builds the scenario on the grid. `model` replaces the scenario's default speed.
ScenarioData build_scenario(const Scenario& scenario, const Grid& grid,
                            const std::optional<WaveSpeedModel>& model = std::nullopt);

}  // namespace varwave
