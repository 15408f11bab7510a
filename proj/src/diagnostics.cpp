#include "varwave/diagnostics.hpp"

#include "varwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace varwave {

std::string to_string(Check check) {
    switch (check) {
    case Check::energy: return "energy";
    case Check::ledger: return "ledger";
    case Check::invariant_domain: return "invariant_domain";
    case Check::lp_monotone: return "lp_monotone";
    case Check::hlem: return "hlem";
    case Check::hi_alpha_monotone: return "hi_alpha_monotone";
    }
    return "unknown";
}

Check parse_check(const std::string& name) {
    for (Check c : {Check::energy, Check::ledger, Check::invariant_domain, Check::lp_monotone,
                    Check::hlem, Check::hi_alpha_monotone}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw PreconditionError("unknown check '" + name + "'");
}

void DiagnosticsConfig::validate() const {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw PreconditionError("diag.alpha must lie in [0, 1)");
    }
    if (!(window_a < window_b)) {
        throw PreconditionError("diag.window_a must be below diag.window_b");
    }
    if (every_n_steps == 0) {
        throw PreconditionError("diag.every_n_steps must be positive");
    }
}

double energy(const StateRS& state, const Grid& grid) {
    double sum = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        sum += state.R[j] * state.R[j] + state.S[j] * state.S[j];
    }
    return grid.dx * sum;
}

double dissipation(const StateRS& state, const CoefficientField& coeffs, const Grid& grid) {
    const std::size_t n = state.size();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double r_next = j + 1 < n ? state.R[j + 1] : 0.0;
        const double s_prev = j > 0 ? state.S[j - 1] : 0.0;
        const double dpR = (r_next - state.R[j]) / grid.dx;
        const double dmS = (state.S[j] - s_prev) / grid.dx;
        sum += coeffs.c_half[j + 1] * dpR * dpR + coeffs.c_half[j] * dmS * dmS;
    }
    return grid.dx * grid.dx * sum;
}

double hlem_residual(const StateRS& state, const RhsEval& rhs_eval, const Grid& grid) {
    const std::size_t n = state.size();
    const auto& c = rhs_eval.coeffs.c_half;
    const double dx = grid.dx;
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double R = state.R[j];
        const double S = state.S[j];
        const double r_next = j + 1 < n ? state.R[j + 1] : 0.0;
        const double s_prev = j > 0 ? state.S[j - 1] : 0.0;
        const double lhs = 2.0 * R * rhs_eval.dR[j] + 2.0 * S * rhs_eval.dS[j];
        const double flux_R = (c[j + 1] * r_next * r_next - c[j] * R * R) / dx;
        const double flux_S = (c[j + 1] * S * S - c[j] * s_prev * s_prev) / dx;
        const double dpR = (r_next - R) / dx;
        const double dmS = (S - s_prev) / dx;
        const double diss = dx * (c[j + 1] * dpR * dpR + c[j] * dmS * dmS);
        worst = std::max(worst, std::abs(lhs - flux_R + flux_S + diss));
    }
    return worst;
}

InvariantReport check_invariant_domain(const StateRS& state, double M) {
    if (!(M > 0.0)) {
        throw PreconditionError("check_invariant_domain needs M > 0");
    }
    const double tol = 1e-8 * std::max(1.0, M);
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < state.size(); ++j) {
        hi = std::max({hi, state.R[j], state.S[j]});
        lo = std::min({lo, state.R[j], state.S[j]});
    }
    InvariantReport report;
    if (state.size() == 0) {
        return report;
    }
    report.sign_ok = hi <= tol;
    report.lower_ok = lo >= -M - tol;
    report.worst = std::max({0.0, hi, -M - lo});
    return report;
}

double smooth_cutoff(double x, double a, double b) {
    if (x >= a && x <= b) {
        return 1.0;
    }
    double s = 0.0;
    if (x < a) {
        s = x - (a - 1.0);
    } else {
        s = (b + 1.0) - x;
    }
    if (s <= 0.0) {
        return 0.0;
    }
    return s * s * (3.0 - 2.0 * s);
}

double higher_integrability_increment(const StateRS& state, const CoefficientField& coeffs,
                                      const Grid& grid, const DiagnosticsConfig& cfg) {
    const double power = 2.0 + cfg.alpha;
    double sum = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        const double chi = smooth_cutoff(grid.center(j), cfg.window_a, cfg.window_b);
        if (chi == 0.0) {
            continue;
        }
        sum += chi * coeffs.tc[j] * std::pow(std::abs(state.R[j] - state.S[j]), power);
    }
    return grid.dx * sum;
}

DiagnosticsLog::DiagnosticsLog(const Grid& grid, DiagnosticsConfig cfg) : grid_(grid), cfg_(std::move(cfg)) {
    cfg_.validate();
}

DiagnosticsRecord DiagnosticsLog::measure(const StateRS& state, const RhsEval& at_state) const {
    DiagnosticsRecord rec;
    rec.t = state.t;
    rec.energy = energy(state, grid_);
    double l1 = 0.0;
    double l3 = 0.0;
    rec.r_max = rec.s_max = -std::numeric_limits<double>::infinity();
    rec.r_min = rec.s_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < state.size(); ++j) {
        const double r = std::abs(state.R[j]);
        const double s = std::abs(state.S[j]);
        l1 += r + s;
        l3 += r * r * r + s * s * s;
        rec.r_max = std::max(rec.r_max, state.R[j]);
        rec.s_max = std::max(rec.s_max, state.S[j]);
        rec.r_min = std::min(rec.r_min, state.R[j]);
        rec.s_min = std::min(rec.s_min, state.S[j]);
    }
    rec.l1 = grid_.dx * l1;
    rec.l3 = std::cbrt(grid_.dx * l3);
    rec.diss_cum = diss_cum_;
    rec.hlem_residual_max = hlem_residual(state, at_state, grid_);
    rec.hi_alpha = hi_alpha_;
    return rec;
}

void DiagnosticsLog::start(const StateRS& state, const RhsEval& at_state) {
    records_.clear();
    diss_cum_ = 0.0;
    hi_alpha_ = 0.0;
    steps_ = 0;
    last_hi_increment_ = higher_integrability_increment(state, at_state.coeffs, grid_, cfg_);
    records_.push_back(measure(state, at_state));
}

void DiagnosticsLog::advance(const StateRS& state, const RhsEval& at_state, double dt,
                             double diss_increment, bool force_record) {
    ++steps_;
    diss_cum_ += diss_increment;
    const double hi_inc = higher_integrability_increment(state, at_state.coeffs, grid_, cfg_);
    hi_alpha_ += 0.5 * dt * (last_hi_increment_ + hi_inc);
    last_hi_increment_ = hi_inc;
    if (force_record || steps_ % cfg_.every_n_steps == 0) {
        records_.push_back(measure(state, at_state));
    }
}

namespace {

std::string describe(const char* what, std::size_t index, double t, double value, double bound) {
    std::ostringstream out;
    out.precision(6);
    out << what << " at record " << index << " (t = " << t << "): " << value << " vs bound " << bound;
    return out.str();
}

}  // namespace

std::vector<CheckResult> evaluate_checks(const std::vector<DiagnosticsRecord>& records,
                                         const std::set<Check>& checks, double M,
                                         const Grid& grid, const CheckTolerances& tol) {
    std::vector<CheckResult> results;
    if (records.empty()) {
        for (Check c : checks) {
            results.push_back({c, true, "no records"});
        }
        return results;
    }
    const DiagnosticsRecord& first = records.front();
    for (Check c : checks) {
        CheckResult res{c, true, {}};
        double worst = 0.0;
        for (std::size_t i = 0; i < records.size() && res.passed; ++i) {
            const auto& r = records[i];
            switch (c) {
            case Check::energy: {
                const double bound = first.energy * (1.0 + tol.energy_rel);
                worst = std::max(worst, r.energy / std::max(first.energy, 1e-300) - 1.0);
                if (!(r.energy <= bound)) {
                    res.passed = false;
                    res.detail = describe("energy", i, r.t, r.energy, bound);
                }
                break;
            }
            case Check::ledger: {
                const double gap = std::abs(r.energy + r.diss_cum - first.energy);
                const double bound = tol.ledger_rel * first.energy;
                worst = std::max(worst, gap / std::max(first.energy, 1e-300));
                if (!(gap <= bound)) {
                    res.passed = false;
                    res.detail = describe("energy ledger gap", i, r.t, gap, bound);
                }
                break;
            }
            case Check::invariant_domain: {
                const double inv_tol = 1e-8 * std::max(1.0, M);
                const double hi = std::max(r.r_max, r.s_max);
                const double lo = std::min(r.r_min, r.s_min);
                worst = std::max({worst, hi, -M - lo});
                if (!(hi <= inv_tol)) {
                    res.passed = false;
                    res.detail = describe("max(R, S)", i, r.t, hi, inv_tol);
                } else if (!(lo >= -M - inv_tol)) {
                    res.passed = false;
                    res.detail = describe("min(R, S)", i, r.t, lo, -M - inv_tol);
                }
                break;
            }
            case Check::lp_monotone: {
                if (i == 0) break;
                const auto& prev = records[i - 1];
                if (!(r.l1 <= prev.l1 * (1.0 + tol.lp_rel))) {
                    res.passed = false;
                    res.detail = describe("l1 increase", i, r.t, r.l1, prev.l1 * (1.0 + tol.lp_rel));
                } else if (!(r.l3 <= prev.l3 * (1.0 + tol.lp_rel))) {
                    res.passed = false;
                    res.detail = describe("l3 increase", i, r.t, r.l3, prev.l3 * (1.0 + tol.lp_rel));
                }
                worst = std::max({worst, r.l1 / std::max(prev.l1, 1e-300) - 1.0,
                                  r.l3 / std::max(prev.l3, 1e-300) - 1.0});
                break;
            }
            case Check::hlem: {
                const double s = std::max({std::abs(r.r_max), std::abs(r.r_min), std::abs(r.s_max),
                                           std::abs(r.s_min)});
                const double bound = tol.hlem_coeff * s * s * s / grid.dx;
                worst = std::max(worst, r.hlem_residual_max);
                if (!(r.hlem_residual_max <= bound)) {
                    res.passed = false;
                    res.detail = describe("hlem residual", i, r.t, r.hlem_residual_max, bound);
                }
                break;
            }
            case Check::hi_alpha_monotone: {
                if (i == 0) break;
                const double drop = records[i - 1].hi_alpha - r.hi_alpha;
                worst = std::max(worst, drop);
                if (!(drop <= tol.hi_alpha_abs * std::max(1.0, std::abs(r.hi_alpha)))) {
                    res.passed = false;
                    res.detail = describe("hi_alpha decrease", i, r.t, drop, tol.hi_alpha_abs);
                }
                break;
            }
            }
        }
        if (res.passed) {
            std::ostringstream out;
            out.precision(3);
            out << "worst " << worst << " over " << records.size() << " records";
            res.detail = out.str();
        }
        results.push_back(res);
    }
    return results;
}

}  // namespace varwave
