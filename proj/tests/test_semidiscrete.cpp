#include "support.hpp"
#include "varwave/diagnostics.hpp"
#include "varwave/fulldiscrete.hpp"
#include "varwave/initial_data.hpp"
#include "varwave/rhs.hpp"
#include "varwave/semidiscrete.hpp"

#include <doctest.h>

#include <algorithm>

using namespace varwave;

TEST_SUITE("semidiscrete") {

TEST_CASE("rhs at reference states") {
    const Grid g{0.0, 3.0, 3, 1.0};
    const auto c1 = WaveSpeedModel::constant(1.0);
    const auto ev = rhs(StateRS{0.0, {0.0, -1.0, 0.0}, {0.0, 0.0, 0.0}}, g, c1, Strategy::exact_f);
    CHECK(ev.dR == std::vector<double>{-1.0, 1.0, 0.0});
    CHECK(ev.dS == std::vector<double>{0.0, 0.0, 0.0});

    const Grid g5 = make_grid(0.0, 1.0, 5);
    const StateRS flat{0.0, std::vector<double>(5, -0.7), std::vector<double>(5, -0.7)};
    const auto ev_flat = rhs(flat, g5, WaveSpeedModel::arctan(), Strategy::exact_f);
    // Interior cells are stationary; the boundary cells see the zero ghosts.
    for (std::size_t j = 1; j + 1 < 5; ++j) {
        CHECK(ev_flat.dR[j] == 0.0);
        CHECK(ev_flat.dS[j] == 0.0);
    }
    const auto ev0 = rhs(StateRS::zeros(g5), g5, WaveSpeedModel::arctan(), Strategy::balanced);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(ev0.dR[j] == 0.0);
        CHECK(ev0.dS[j] == 0.0);
    }
}

TEST_CASE("zero data stay zero") {
    const Grid g = make_grid(-1.0, 1.0, 16);
    IntegrateOptions opts;
    opts.keep_states = true;
    const auto traj = integrate(StateRS::zeros(g), 1.0, g, WaveSpeedModel::arctan(), opts);
    for (const auto& s : traj.states) {
        CHECK(s.max_abs() == 0.0);
    }
    CHECK(traj.final.state.t == doctest::Approx(1.0));
}

TEST_CASE("gauss_rs_neg energy stays below its initial value") {
    const Grid g = make_grid(-15.0, 15.0, 256);
    const auto data = build_scenario({ScenarioName::gauss_rs_neg, {}}, g);
    IntegrateOptions opts;
    const auto traj = integrate(data.state, 2.0, g, data.model, opts);
    const double e0 = traj.records.front().energy;
    for (const auto& r : traj.records) {
        CHECK(r.energy <= e0 * (1.0 + 1e-8));
    }
    CHECK(traj.records.back().t == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("stop times land exactly") {
    const Grid g = make_grid(-15.0, 15.0, 64);
    const auto data = build_scenario({ScenarioName::gauss_rs_neg, {}}, g);
    IntegrateOptions opts;
    opts.stop_times = {0.0, 0.3333, 1.0};
    const auto traj = integrate(data.state, 1.0, g, data.model, opts);
    REQUIRE(traj.snapshots.size() == 3);
    CHECK(traj.snapshots[0].state.t == 0.0);
    CHECK(traj.snapshots[1].state.t == 0.3333);
    CHECK(traj.snapshots[2].state.t == 1.0);
}

TEST_CASE("property: hlem identity on random states") {
    std::mt19937_64 rng(41);
    const Grid g = make_grid(-4.0, 4.0, 48);
    for (const auto& m : {WaveSpeedModel::constant(1.0), WaveSpeedModel::arctan()}) {
        const double coeff = m.kind() == SpeedKind::constant ? 1e-12 : 1e-11;
        for (int trial = 0; trial < 30; ++trial) {
            const auto s = testsupport::random_state(g, rng);
            const double scale = s.max_abs();
            const auto ev = rhs(s, g, m, Strategy::exact_f);
            CHECK(hlem_residual(s, ev, g) <= coeff * scale * scale * scale / g.dx);
        }
    }
}

TEST_CASE("property: one euler step equals one explicit step") {
    std::mt19937_64 rng(42);
    const Grid g = make_grid(-3.0, 3.0, 40);
    const auto m = WaveSpeedModel::arctan();
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = testsupport::random_state(g, rng);
        const auto co = build_coefficients(Strategy::balanced, m, s, g, 0.0);
        const double c_top = *std::max_element(co.c_half.begin(), co.c_half.end());
        IntegrateOptions opts;
        opts.method = Method::euler;
        opts.strategy = Strategy::balanced;
        opts.cfl = 0.4;
        const double dt = opts.cfl * g.dx / c_top;
        const auto traj = integrate(s, dt, g, m, opts);
        REQUIRE(traj.steps == 1);

        const FullState next = step_explicit(FullState{s, co.u_half, 0}, dt, g, m, StepOptions{});
        CHECK(testsupport::max_abs_diff(traj.final.state.R, next.state.R) <= 1e-13);
        CHECK(testsupport::max_abs_diff(traj.final.state.S, next.state.S) <= 1e-13);
    }
}

}
