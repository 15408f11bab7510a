#include "varwave/initial_data.hpp"

#include "varwave/coefficients.hpp"
#include "varwave/errors.hpp"

#include <cmath>
#include <numbers>

namespace varwave {

StateRS discretize_uv(const RealFunction& u0, const RealFunction& v0, const Grid& grid,
                      const WaveSpeedModel& model, const std::optional<RealFunction>& u0_prime) {
    const std::size_t n = grid.n_cells;
    const std::vector<double> v_avg = project_cell_averages(v0, grid);
    std::vector<double> du_avg;
    if (u0_prime) {
        du_avg = project_cell_averages(*u0_prime, grid);
    } else {
        du_avg.resize(n);
        double left = u0(grid.edge(0));
        for (std::size_t j = 0; j < n; ++j) {
            const double right = u0(grid.edge(j + 1));
            du_avg[j] = (right - left) / grid.dx;
            left = right;
        }
    }
    StateRS state = StateRS::zeros(grid);
    for (std::size_t j = 0; j < n; ++j) {
        const double speed = model.c(u0(grid.center(j)));
        state.R[j] = v_avg[j] + speed * du_avg[j];
        state.S[j] = v_avg[j] - speed * du_avg[j];
    }
    return state;
}

ScenarioName parse_scenario_name(const std::string& name) {
    if (name == "gauss_rs") return ScenarioName::gauss_rs;
    if (name == "gauss_rs_neg") return ScenarioName::gauss_rs_neg;
    if (name == "glassey_pulse") return ScenarioName::glassey_pulse;
    if (name == "transport") return ScenarioName::transport;
    throw UnknownScenario("unknown scenario '" + name + "'");
}

std::string to_string(ScenarioName name) {
    switch (name) {
    case ScenarioName::gauss_rs: return "gauss_rs";
    case ScenarioName::gauss_rs_neg: return "gauss_rs_neg";
    case ScenarioName::glassey_pulse: return "glassey_pulse";
    case ScenarioName::transport: return "transport";
    }
    return "unknown";
}

std::vector<ScenarioName> all_scenarios() {
    return {ScenarioName::gauss_rs, ScenarioName::gauss_rs_neg, ScenarioName::glassey_pulse,
            ScenarioName::transport};
}

std::map<std::string, double> scenario_parameters(ScenarioName name) {
    switch (name) {
    case ScenarioName::gauss_rs:
    case ScenarioName::gauss_rs_neg:
        return {{"amplitude", 2.0}, {"r_center", 5.0}, {"s_center", -5.0}};
    case ScenarioName::glassey_pulse:
        return {{"offset", std::numbers::pi / 4.0}, {"amplitude", 1.0}};
    case ScenarioName::transport:
        return {{"amplitude", 1.0}, {"center", 0.0}, {"width", 1.0}};
    }
    return {};
}

std::string scenario_description(ScenarioName name) {
    switch (name) {
    case ScenarioName::gauss_rs:
        return "R0 = -2 exp(-(x-5)^2), S0 = 2 exp(-(x+5)^2), arctan speed (S0 > 0)";
    case ScenarioName::gauss_rs_neg:
        return "R0 = -2 exp(-(x-5)^2), S0 = -2 exp(-(x+5)^2), arctan speed (nonpositive data)";
    case ScenarioName::glassey_pulse:
        return "u0 = pi/4 + exp(-x^2), u_t = -c(u) u_x, liquid_crystal(1.5, 0.5) speed";
    case ScenarioName::transport:
        return "R0 = -exp(-x^2), S0 = 0, constant speed 1 (pure left-moving transport)";
    }
    return "";
}

WaveSpeedModel default_model(ScenarioName name) {
    switch (name) {
    case ScenarioName::gauss_rs:
    case ScenarioName::gauss_rs_neg:
        return WaveSpeedModel::arctan();
    case ScenarioName::glassey_pulse:
        return WaveSpeedModel::liquid_crystal(1.5, 0.5);
    case ScenarioName::transport:
        return WaveSpeedModel::constant(1.0);
    }
    return WaveSpeedModel::arctan();
}

ScenarioData build_scenario(const Scenario& scenario, const Grid& grid,
                            const std::optional<WaveSpeedModel>& model) {
    auto params = scenario_parameters(scenario.name);
    for (const auto& [key, value] : scenario.parameters) {
        if (!params.contains(key)) {
            throw UnknownScenario("scenario " + to_string(scenario.name) + " has no parameter '" + key + "'");
        }
        params[key] = value;
    }
    ScenarioData data{StateRS::zeros(grid), model.value_or(default_model(scenario.name)), 0.0, {}};

    switch (scenario.name) {
    case ScenarioName::gauss_rs:
    case ScenarioName::gauss_rs_neg: {
        const double a = params["amplitude"];
        const double xr = params["r_center"];
        const double xs = params["s_center"];
        const double s_sign = scenario.name == ScenarioName::gauss_rs ? 1.0 : -1.0;
        data.state.R = project_cell_averages(
            [=](double x) { return -a * std::exp(-(x - xr) * (x - xr)); }, grid);
        data.state.S = project_cell_averages(
            [=](double x) { return s_sign * a * std::exp(-(x - xs) * (x - xs)); }, grid);
        break;
    }
    case ScenarioName::glassey_pulse: {
        const double off = params["offset"];
        const double a = params["amplitude"];
        auto u0 = [=](double x) { return off + a * std::exp(-x * x); };
        auto du0 = [=](double x) { return -2.0 * a * x * std::exp(-x * x); };
        const WaveSpeedModel& m = data.model;
        auto v0 = [&m, u0, du0](double x) { return -m.c(u0(x)) * du0(x); };
        data.state = discretize_uv(u0, v0, grid, data.model);
        data.u_left = u0(grid.x_min);
        break;
    }
    case ScenarioName::transport: {
        const double a = params["amplitude"];
        const double x0 = params["center"];
        const double w = params["width"];
        data.state.R = project_cell_averages(
            [=](double x) { return -a * std::exp(-(x - x0) * (x - x0) / (w * w)); }, grid);
        break;
    }
    }
    data.u_half = reconstruct_u(Strategy::balanced, data.model, data.state, grid, data.u_left);
    return data;
}

}  // namespace varwave
