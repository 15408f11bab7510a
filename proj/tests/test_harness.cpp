#include "varwave/errors.hpp"
#include "varwave/harness.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace varwave;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("varwave_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename E>
int error_line(const std::string& text) {
    try {
        parse_config(text);
    } catch (const E& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_SUITE("harness_cli") {

TEST_CASE("parse_config accepts the documented example") {
    const SimConfig cfg = parse_config("n_cells = 256\nx_min = -15\nx_max = 15\nscenario = gauss_rs_neg\nt_end = 2\n");
    CHECK(cfg.n_cells == 256);
    CHECK(cfg.scenario.name == ScenarioName::gauss_rs_neg);
    CHECK(make_grid(cfg.x_min, cfg.x_max, cfg.n_cells).dx == 30.0 / 256);
    CHECK(cfg.effective_cfl() == 0.45);
}

TEST_CASE("parse_config errors") {
    CHECK_THROWS_AS(parse_config("cfl = 1.5"), RangeError);
    CHECK_THROWS_AS(parse_config("bogus = 1"), UnknownKey);
    CHECK_THROWS_AS(parse_config("n_cells = abc"), ParseError);
    CHECK_THROWS_AS(parse_config("n_cells = 2"), RangeError);
    CHECK_THROWS_AS(parse_config("just words"), ParseError);
    CHECK_THROWS_AS(parse_config("t_end = 1\nt_end = 2"), ParseError);
    CHECK_THROWS_AS(parse_config("scenario = nope"), RangeError);
    CHECK_THROWS_AS(parse_config("scenario = transport\nscenario.amplitude = 0.5\nscenario.bogus = 1"), UnknownKey);
    CHECK_THROWS_AS(parse_config("t_end = 1\nsnapshot_times = 0, 2"), RangeError);
    CHECK(error_line<UnknownKey>("# comment\n\nn_cells = 64\nbogus = 1\n") == 4);
    CHECK(error_line<RangeError>("cfl = 0\n") == 1);
}

TEST_CASE("parse_config keys") {
    const SimConfig cfg = parse_config(
        "scheme = explicit\nu_update = time\ndt_over_dx = 1\nallow_supercritical = true\n"
        "diag.checks = hlem, energy\ndiag.invariant_m = 3\nsnapshot_times = 0, 1\nseed = 7  # trailing\n"
        "scenario = glassey_pulse\nscenario.amplitude = 0.5\nmodel = liquid_crystal\nmodel.alpha = 2\n");
    CHECK(cfg.scheme == Scheme::explicit_upwind);
    CHECK(cfg.effective_cfl() == 0.9);
    CHECK(cfg.u_update == UUpdate::time_integrate);
    CHECK(cfg.dt_over_dx == 1.0);
    CHECK(cfg.allow_supercritical);
    CHECK(cfg.checks == std::set<Check>{Check::hlem, Check::energy});
    CHECK(cfg.invariant_m == 3.0);
    CHECK(cfg.snapshot_times == std::vector<double>{0.0, 1.0});
    CHECK(cfg.seed == 7);
    CHECK(cfg.scenario.parameters.at("amplitude") == 0.5);
    CHECK(model_from_config(cfg).alpha() == 2.0);
}

TEST_CASE("zero data run") {
    SimConfig cfg = parse_config("scenario = gauss_rs_neg\nscenario.amplitude = 0\nn_cells = 32\nt_end = 0.5\n");
    cfg.output_dir = scratch_dir("zero").string();
    const RunResult run = run_simulation(cfg);
    for (const auto& r : run.trajectory.records) {
        CHECK(r.energy == 0.0);
        CHECK(r.l1 == 0.0);
        CHECK(r.diss_cum == 0.0);
        CHECK(r.hi_alpha == 0.0);
        CHECK(r.hlem_residual_max == 0.0);
    }
    CHECK(run.all_passed());
    std::filesystem::remove_all(cfg.output_dir);
}

TEST_CASE("gauss_rs_neg energy column is nonincreasing") {
    SimConfig cfg = parse_config("scenario = gauss_rs_neg\nt_end = 2\n");
    const RunResult run = run_simulation(cfg, RunOptions{false, false});
    const auto& rec = run.trajectory.records;
    for (std::size_t i = 1; i < rec.size(); ++i) {
        CHECK(rec[i].energy <= rec[i - 1].energy * (1.0 + 1e-7));
    }
}

TEST_CASE("glassey rerun writes snapshots") {
    SimConfig cfg = parse_config(
        "scenario = glassey_pulse\nscheme = explicit\nu_update = time\ndt_over_dx = 1\nallow_supercritical = true\n"
        "snapshot_times = 0, 1, 2\nt_end = 2\n");
    cfg.output_dir = scratch_dir("glassey").string();
    const RunResult run = run_simulation(cfg);
    CHECK(run.files.size() == 4);
    for (const char* name : {"series.csv", "snapshot_0.csv", "snapshot_1.csv", "snapshot_2.csv"}) {
        CHECK(std::filesystem::exists(std::filesystem::path(cfg.output_dir) / name));
    }
    const std::string snap = slurp(std::filesystem::path(cfg.output_dir) / "snapshot_0.csv");
    CHECK(snap.rfind("x,u,R,S\n", 0) == 0);
    CHECK(std::count(snap.begin(), snap.end(), '\n') == 257);
    CHECK_FALSE(run.warnings.empty());
    std::filesystem::remove_all(cfg.output_dir);
}

TEST_CASE("csv output is deterministic") {
    SimConfig cfg = parse_config("scenario = gauss_rs_neg\nn_cells = 64\nt_end = 1\nsnapshot_times = 0.5\n");
    cfg.output_dir = scratch_dir("det_a").string();
    run_simulation(cfg);
    const std::string a_series = slurp(std::filesystem::path(cfg.output_dir) / "series.csv");
    const std::string a_snap = slurp(std::filesystem::path(cfg.output_dir) / "snapshot_0.5.csv");
    std::filesystem::remove_all(cfg.output_dir);
    cfg.output_dir = scratch_dir("det_b").string();
    run_simulation(cfg);
    CHECK(slurp(std::filesystem::path(cfg.output_dir) / "series.csv") == a_series);
    CHECK(slurp(std::filesystem::path(cfg.output_dir) / "snapshot_0.5.csv") == a_snap);
    CHECK(a_series.rfind("t,energy,l1,l3,diss_cum,r_max,s_max,r_min,s_min,hlem_residual_max,hi_alpha\n", 0) == 0);
    std::filesystem::remove_all(cfg.output_dir);
}

TEST_CASE("refinement study") {
    SimConfig cfg = parse_config("scenario = gauss_rs_neg\nn_cells = 128\nt_end = 2\n");
    CHECK_THROWS_AS(refinement_study(cfg, 2), PreconditionError);
    const auto rep = refinement_study(cfg, 3);
    REQUIRE(rep.pairwise_l2_u.size() == 2);
    CHECK(rep.pairwise_l2_u[1] < rep.pairwise_l2_u[0]);
    CHECK(rep.levels[2].n_cells == 512);

    std::ostringstream csv;
    write_refinement_csv(csv, rep);
    CHECK(csv.str().rfind("n_cells,dx,pairwise_l2_u,hi_alpha\n", 0) == 0);
}

TEST_CASE("refinement of linear transport is first order") {
    SimConfig cfg = parse_config("scenario = transport\nn_cells = 128\nt_end = 1\n");
    const auto rep = refinement_study(cfg, 4);
    CHECK(rep.observed_order == doctest::Approx(1.0).epsilon(0.3));
}

}
