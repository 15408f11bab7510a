#include "support.hpp"
#include "varwave/diagnostics.hpp"
#include "varwave/errors.hpp"
#include "varwave/initial_data.hpp"
#include "varwave/rhs.hpp"
#include "varwave/semidiscrete.hpp"

#include <doctest.h>

using namespace varwave;

TEST_SUITE("diagnostics") {

TEST_CASE("energy") {
    const Grid g{0.0, 1.0, 2, 0.5};
    CHECK(energy(StateRS{0.0, {-1.0, -2.0}, {0.0, -1.0}}, g) == 3.0);
    CHECK(energy(StateRS::zeros(g), g) == 0.0);
    std::mt19937_64 rng(61);
    const Grid h = make_grid(-1.0, 1.0, 30);
    auto s = testsupport::random_state(h, rng);
    const double e = energy(s, h);
    for (auto& r : s.R) r *= -3.0;
    for (auto& v : s.S) v *= -3.0;
    CHECK(energy(s, h) == doctest::Approx(9.0 * e).epsilon(1e-14));
}

TEST_CASE("dissipation") {
    const Grid g{0.0, 3.0, 3, 1.0};
    const auto c1 = WaveSpeedModel::constant(1.0);
    const StateRS s{0.0, {0.0, -1.0, 0.0}, {0.0, 0.0, 0.0}};
    CHECK(dissipation(s, build_coefficients(Strategy::exact_f, c1, s, g, 0.0), g) == 2.0);

    // Uniform state: interior differences vanish, only the ghost jumps remain.
    const Grid g5 = make_grid(0.0, 5.0, 5);
    const StateRS flat{0.0, std::vector<double>(5, -1.0), std::vector<double>(5, -1.0)};
    const auto co = build_coefficients(Strategy::exact_f, c1, flat, g5, 0.0);
    CHECK(dissipation(flat, co, g5) == doctest::Approx(2.0).epsilon(1e-15));

    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = testsupport::random_state(g5, rng, -2.0, 2.0);
        CHECK(dissipation(r, build_coefficients(Strategy::exact_f, WaveSpeedModel::arctan(), r, g5, 0.0), g5) >= 0.0);
    }
}

TEST_CASE("hlem residual") {
    const Grid g = make_grid(-1.0, 1.0, 10);
    const auto ev = rhs(StateRS::zeros(g), g, WaveSpeedModel::arctan(), Strategy::exact_f);
    CHECK(hlem_residual(StateRS::zeros(g), ev, g) == 0.0);
}

TEST_CASE("invariant domain") {
    const StateRS inside{0.0, {-0.5, -2.0, 0.0}, {-1.0, 0.0, -1.5}};
    const auto ok = check_invariant_domain(inside, 2.0);
    CHECK(ok.sign_ok);
    CHECK(ok.lower_ok);
    CHECK(ok.worst == 0.0);
    const StateRS bump{0.0, {-0.5, 0.1, 0.0}, {-1.0, 0.0, -1.5}};
    const auto bad = check_invariant_domain(bump, 2.0);
    CHECK_FALSE(bad.sign_ok);
    CHECK(bad.lower_ok);
    CHECK(bad.worst == doctest::Approx(0.1));
    CHECK_FALSE(check_invariant_domain(StateRS{0.0, {-2.5}, {0.0}}, 2.0).lower_ok);
}

TEST_CASE("smooth cutoff") {
    CHECK(smooth_cutoff(0.0, -1.0, 1.0) == 1.0);
    CHECK(smooth_cutoff(-1.0, -1.0, 1.0) == 1.0);
    CHECK(smooth_cutoff(2.0, -1.0, 1.0) == 0.0);
    CHECK(smooth_cutoff(-5.0, -1.0, 1.0) == 0.0);
    CHECK(smooth_cutoff(1.5, -1.0, 1.0) == doctest::Approx(0.5));
    for (double x = -2.5; x <= 2.5; x += 0.01) {
        const double chi = smooth_cutoff(x, -1.0, 1.0);
        CHECK(chi >= 0.0);
        CHECK(chi <= 1.0);
    }
}

TEST_CASE("higher integrability increment") {
    DiagnosticsConfig cfg;
    const Grid g = make_grid(-5.0, 5.0, 40);
    std::mt19937_64 rng(63);
    const auto s = testsupport::random_state(g, rng);
    CHECK(higher_integrability_increment(s, build_coefficients(Strategy::exact_f, WaveSpeedModel::constant(1.0), s, g, 0.0),
                                         g, cfg) == 0.0);
    const StateRS same{0.0, s.R, s.R};
    CHECK(higher_integrability_increment(same, build_coefficients(Strategy::exact_f, WaveSpeedModel::arctan(), same, g, 0.0),
                                         g, cfg) == 0.0);
    CHECK(higher_integrability_increment(s, build_coefficients(Strategy::exact_f, WaveSpeedModel::arctan(), s, g, 0.0), g,
                                         cfg) > 0.0);
}

TEST_CASE("config validation") {
    DiagnosticsConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.alpha = 1.0;
    CHECK_THROWS_AS(cfg.validate(), PreconditionError);
    cfg.alpha = 0.5;
    cfg.window_a = 3.0;
    cfg.window_b = 3.0;
    CHECK_THROWS_AS(cfg.validate(), PreconditionError);
    for (Check c : {Check::energy, Check::ledger, Check::invariant_domain, Check::lp_monotone, Check::hlem,
                    Check::hi_alpha_monotone}) {
        CHECK(parse_check(to_string(c)) == c);
    }
}

TEST_CASE("run-level invariants on gauss_rs_neg") {
    const Grid g = make_grid(-15.0, 15.0, 256);
    const auto data = build_scenario({ScenarioName::gauss_rs_neg, {}}, g);
    IntegrateOptions opts;
    opts.keep_states = true;
    const auto traj = integrate(data.state, 4.0, g, data.model, opts);
    double worst_hlem = 0.0;
    for (const auto& r : traj.records) {
        const double scale = std::max({std::abs(r.r_min), std::abs(r.s_min), std::abs(r.r_max), std::abs(r.s_max)});
        worst_hlem = std::max(worst_hlem, r.hlem_residual_max / (scale * scale * scale / g.dx));
    }
    CHECK(worst_hlem <= 1e-11);
    for (const auto& s : traj.states) {
        const auto rep = check_invariant_domain(s, 2.0);
        CHECK(rep.sign_ok);
        CHECK(rep.lower_ok);
    }
    for (std::size_t i = 1; i < traj.records.size(); ++i) {
        CHECK(traj.records[i].hi_alpha >= traj.records[i - 1].hi_alpha);
        // l3 and the energy (the L^2 norm squared) never grow.
        CHECK(traj.records[i].l3 <= traj.records[i - 1].l3 * (1.0 + 1e-7));
        CHECK(traj.records[i].energy <= traj.records[i - 1].energy * (1.0 + 1e-7));
    }
    const auto results = evaluate_checks(traj.records, {Check::energy, Check::invariant_domain, Check::hlem,
                                                        Check::hi_alpha_monotone},
                                         2.0, g);
    for (const auto& c : results) {
        INFO(to_string(c.check) << ": " << c.detail);
        CHECK(c.passed);
    }
}

}
