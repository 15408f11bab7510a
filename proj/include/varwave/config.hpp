#pragma once

#include "varwave/coefficients.hpp"
#include "varwave/diagnostics.hpp"
#include "varwave/fulldiscrete.hpp"
#include "varwave/initial_data.hpp"
#include "varwave/semidiscrete.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varwave {

enum class Scheme { semidiscrete, explicit_upwind };

/// Every knob of a run. Defaults are the documented ones; see parse_config.
struct SimConfig {
    double x_min = -15.0;
    double x_max = 15.0;
    std::size_t n_cells = 256;

    /// Empty means the scenario's own speed model.
    std::optional<std::string> model;
    double model_alpha = 1.5;
    double model_beta = 0.5;
    double model_c0 = 1.0;

    Scenario scenario;

    Scheme scheme = Scheme::semidiscrete;
    Strategy strategy = Strategy::exact_f;
    Method method = Method::rk4;
    /// Empty means 0.45 (semidiscrete) or 0.9 (explicit).
    std::optional<double> cfl;
    double t_end = 2.0;
    UUpdate u_update = UUpdate::space_integrate;
    bool allow_supercritical = false;
    std::optional<double> dt_over_dx;

    DiagnosticsConfig diag;
    /// Empty means the checks that apply to the run (see default_checks).
    std::optional<std::set<Check>> checks;
    std::optional<double> invariant_m;

    std::string output_dir = "output";
    std::vector<double> snapshot_times;
    std::uint64_t seed = 0;

    double effective_cfl() const { return cfl.value_or(scheme == Scheme::semidiscrete ? 0.45 : 0.9); }
};

/// Parses flat `key = value` lines; `#` starts a comment. Unknown keys raise
/// UnknownKey, malformed lines ParseError, out-of-range values RangeError.
/// Errors carry the 1-based line number.
SimConfig parse_config(std::string_view text);

/// Reads and parses a config file.
SimConfig load_config(const std::string& path);

/// Keys accepted by parse_config, with their defaults, for --help output.
std::vector<std::pair<std::string, std::string>> config_keys();

std::string to_string(Scheme s);

}  // namespace varwave
