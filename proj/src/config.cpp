#include "varwave/config.hpp"

#include "varwave/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace varwave {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view value, int line, const std::string& key) {
    double out = 0.0;
    const char* begin = value.data();
    const char* end = value.data() + value.size();
    if (!value.empty() && *begin == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
        throw ParseError("'" + key + "' expects a number, got '" + std::string(value) + "'", line);
    }
    return out;
}

std::uint64_t to_unsigned(std::string_view value, int line, const std::string& key) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError("'" + key + "' expects a nonnegative integer, got '" + std::string(value) + "'", line);
    }
    return out;
}

bool to_bool(std::string_view value, int line, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ParseError("'" + key + "' expects true or false, got '" + std::string(value) + "'", line);
}

std::vector<std::string_view> split_list(std::string_view value) {
    std::vector<std::string_view> items;
    while (!value.empty()) {
        const auto comma = value.find(',');
        const auto item = trim(value.substr(0, comma));
        if (!item.empty()) {
            items.push_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        value.remove_prefix(comma + 1);
    }
    return items;
}

template <typename F>
auto choice(F&& parse, std::string_view value, int line, const std::string& key) {
    try {
        return parse(std::string(value));
    } catch (const Error& e) {
        throw RangeError("'" + key + "': " + e.what(), line);
    }
}

void require(bool ok, const std::string& what, int line) {
    if (!ok) {
        throw RangeError(what, line);
    }
}

}  // namespace

std::string to_string(Scheme s) {
    return s == Scheme::semidiscrete ? "semidiscrete" : "explicit";
}

std::vector<std::pair<std::string, std::string>> config_keys() {
    return {
        {"x_min", "-15"},
        {"x_max", "15"},
        {"n_cells", "256"},
        {"scenario", "gauss_rs_neg (gauss_rs | gauss_rs_neg | glassey_pulse | transport)"},
        {"scenario.<param>", "scenario parameter override, see `varwave scenarios`"},
        {"model", "scenario default (arctan | liquid_crystal | constant)"},
        {"model.alpha", "1.5"},
        {"model.beta", "0.5"},
        {"model.c0", "1"},
        {"scheme", "semidiscrete (semidiscrete | explicit)"},
        {"coeff_strategy", "exact_f (exact_f | balanced | march)"},
        {"method", "rk4 (euler | rk4)"},
        {"cfl", "0.45 semidiscrete, 0.9 explicit; in (0, 1]"},
        {"t_end", "2"},
        {"u_update", "space (time | space)"},
        {"allow_supercritical", "false"},
        {"dt_over_dx", "unset; fixes dt = value * dx for the explicit scheme"},
        {"diag.alpha", "0.5"},
        {"diag.window_a", "-10"},
        {"diag.window_b", "10"},
        {"diag.every_n_steps", "1"},
        {"diag.checks", "depends on the run (energy, ledger, invariant_domain, lp_monotone, hlem, hi_alpha_monotone)"},
        {"diag.invariant_m", "max |R0|, |S0|"},
        {"output_dir", "output"},
        {"snapshot_times", "none; comma separated"},
        {"seed", "0"},
    };
}

SimConfig parse_config(std::string_view text) {
    SimConfig cfg;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::pair<double, int>>> scenario_overrides;
    int snapshot_line = 0;
    int line_no = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected `key = value`, got '" + std::string(line) + "'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("missing key before '='", line_no);
        }
        if (value.empty()) {
            throw ParseError("missing value for '" + key + "'", line_no);
        }
        if (!seen.insert(key).second) {
            throw ParseError("duplicate key '" + key + "'", line_no);
        }

        if (key == "x_min") {
            cfg.x_min = to_double(value, line_no, key);
        } else if (key == "x_max") {
            cfg.x_max = to_double(value, line_no, key);
        } else if (key == "n_cells") {
            const auto n = to_unsigned(value, line_no, key);
            require(n >= 3, "n_cells must be at least 3", line_no);
            cfg.n_cells = static_cast<std::size_t>(n);
        } else if (key == "model") {
            require(value == "arctan" || value == "liquid_crystal" || value == "constant",
                    "model must be arctan, liquid_crystal or constant", line_no);
            cfg.model = std::string(value);
        } else if (key == "model.alpha") {
            cfg.model_alpha = to_double(value, line_no, key);
            require(cfg.model_alpha > 0.0, "model.alpha must be positive", line_no);
        } else if (key == "model.beta") {
            cfg.model_beta = to_double(value, line_no, key);
            require(cfg.model_beta > 0.0, "model.beta must be positive", line_no);
        } else if (key == "model.c0") {
            cfg.model_c0 = to_double(value, line_no, key);
            require(cfg.model_c0 > 0.0, "model.c0 must be positive", line_no);
        } else if (key == "scenario") {
            cfg.scenario.name = choice(parse_scenario_name, value, line_no, key);
        } else if (key.starts_with("scenario.")) {
            scenario_overrides.push_back({key.substr(9), {to_double(value, line_no, key), line_no}});
        } else if (key == "scheme") {
            if (value == "semidiscrete") {
                cfg.scheme = Scheme::semidiscrete;
            } else if (value == "explicit") {
                cfg.scheme = Scheme::explicit_upwind;
            } else {
                throw RangeError("scheme must be semidiscrete or explicit", line_no);
            }
        } else if (key == "coeff_strategy") {
            cfg.strategy = choice(parse_strategy, value, line_no, key);
        } else if (key == "method") {
            cfg.method = choice(parse_method, value, line_no, key);
        } else if (key == "cfl") {
            const double c = to_double(value, line_no, key);
            require(c > 0.0 && c <= 1.0, "cfl must lie in (0, 1]", line_no);
            cfg.cfl = c;
        } else if (key == "t_end") {
            cfg.t_end = to_double(value, line_no, key);
            require(cfg.t_end > 0.0, "t_end must be positive", line_no);
        } else if (key == "u_update") {
            cfg.u_update = choice(parse_u_update, value, line_no, key);
        } else if (key == "allow_supercritical") {
            cfg.allow_supercritical = to_bool(value, line_no, key);
        } else if (key == "dt_over_dx") {
            const double r = to_double(value, line_no, key);
            require(r > 0.0, "dt_over_dx must be positive", line_no);
            cfg.dt_over_dx = r;
        } else if (key == "diag.alpha") {
            cfg.diag.alpha = to_double(value, line_no, key);
            require(cfg.diag.alpha >= 0.0 && cfg.diag.alpha < 1.0, "diag.alpha must lie in [0, 1)", line_no);
        } else if (key == "diag.window_a") {
            cfg.diag.window_a = to_double(value, line_no, key);
        } else if (key == "diag.window_b") {
            cfg.diag.window_b = to_double(value, line_no, key);
        } else if (key == "diag.every_n_steps") {
            const auto n = to_unsigned(value, line_no, key);
            require(n >= 1, "diag.every_n_steps must be at least 1", line_no);
            cfg.diag.every_n_steps = static_cast<std::size_t>(n);
        } else if (key == "diag.checks") {
            std::set<Check> checks;
            for (auto item : split_list(value)) {
                if (item == "none") continue;
                checks.insert(choice(parse_check, item, line_no, key));
            }
            cfg.checks = checks;
        } else if (key == "diag.invariant_m") {
            const double m = to_double(value, line_no, key);
            require(m > 0.0, "diag.invariant_m must be positive", line_no);
            cfg.invariant_m = m;
        } else if (key == "output_dir") {
            cfg.output_dir = std::string(value);
        } else if (key == "snapshot_times") {
            for (auto item : split_list(value)) {
                cfg.snapshot_times.push_back(to_double(item, line_no, key));
            }
            snapshot_line = line_no;
        } else if (key == "seed") {
            cfg.seed = to_unsigned(value, line_no, key);
        } else {
            throw UnknownKey("unknown key '" + key + "'", line_no);
        }
    }

    const auto known = scenario_parameters(cfg.scenario.name);
    for (const auto& [name, entry] : scenario_overrides) {
        if (!known.contains(name)) {
            throw UnknownKey("scenario " + to_string(cfg.scenario.name) + " has no parameter '" + name + "'",
                             entry.second);
        }
        cfg.scenario.parameters[name] = entry.first;
    }
    require(cfg.x_max > cfg.x_min, "x_max must exceed x_min", 0);
    require(cfg.diag.window_a < cfg.diag.window_b, "diag.window_a must be below diag.window_b", 0);
    for (double t : cfg.snapshot_times) {
        require(t >= 0.0 && t <= cfg.t_end, "snapshot_times must lie in [0, t_end]", snapshot_line);
    }
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace varwave
