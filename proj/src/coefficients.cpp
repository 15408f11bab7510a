#include "varwave/coefficients.hpp"

#include "varwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace varwave {

Strategy parse_strategy(const std::string& name) {
    if (name == "exact_f") return Strategy::exact_f;
    if (name == "balanced") return Strategy::balanced;
    if (name == "march") return Strategy::march;
    throw PreconditionError("unknown coefficient strategy '" + name + "'");
}

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::exact_f: return "exact_f";
    case Strategy::balanced: return "balanced";
    case Strategy::march: return "march";
    }
    return "unknown";
}

std::vector<double> accumulate_F(const StateRS& state, const Grid& grid) {
    std::vector<double> F_half(state.size() + 1);
    F_half[0] = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        F_half[j + 1] = F_half[j] + grid.dx * (state.R[j] - state.S[j]);
    }
    return F_half;
}

double balanced_edge(const WaveSpeedModel& model, double u_prev, double d, double dx) {
    if (d == 0.0) {
        return u_prev;
    }
    const double c_prev = model.c(u_prev);
    auto g = [&](double v) { return v - u_prev - dx * d / (c_prev + model.c(v)); };

    // c_prev + c(v) lies in [2 c_min, 2 c_max], which pins the root.
    const double a = u_prev + dx * d / (2.0 * model.c_max());
    const double b = u_prev + dx * d / (2.0 * model.c_min());
    double lo = std::min(a, b);
    double hi = std::max(a, b);
    const double g_lo = g(lo);
    const double g_hi = g(hi);
    if (!std::isfinite(g_lo) || !std::isfinite(g_hi)) {
        throw NewtonFailure("balanced edge solve: non-finite residual");
    }
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    const double round_scale = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(u_prev));
    if (hi - lo <= round_scale) {
        // Increment below rounding of u_prev; the bracket is the answer.
        return std::abs(g_lo) <= std::abs(g_hi) ? lo : hi;
    }
    if (g_lo > 0.0 || g_hi < 0.0) {
        std::ostringstream msg;
        msg << "balanced edge solve: no sign change on [" << lo << ", " << hi << "] (d = " << d << ")";
        throw NewtonFailure(msg.str());
    }

    double v = std::clamp(u_prev + dx * d / (2.0 * c_prev), lo, hi);
    double r = g(v);
    for (int iter = 0; iter < 100; ++iter) {
        if (r == 0.0) {
            return v;
        }
        if (r < 0.0) {
            lo = v;
        } else {
            hi = v;
        }
        const double sum = c_prev + model.c(v);
        const double slope = 1.0 + dx * d * model.c_prime(v) / (sum * sum);
        double next = v - r / slope;
        if (!(slope > 0.0) || !(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - v);
        v = next;
        r = g(v);
        const double scale = std::max(1.0, std::abs(v));
        const double ulp_scale = 4.0 * std::numeric_limits<double>::epsilon() * scale;
        if (std::abs(r) <= 1e-12 * scale && (step <= ulp_scale || hi - lo <= ulp_scale)) {
            return v;
        }
    }
    if (std::abs(r) <= 1e-12 * std::max(1.0, std::abs(v))) {
        return v;
    }
    throw NewtonFailure("balanced edge solve did not converge (gradient too steep)");
}

std::vector<double> reconstruct_u(Strategy strategy, const WaveSpeedModel& model,
                                  const StateRS& state, const Grid& grid, double u_left) {
    const std::size_t n = state.size();
    std::vector<double> u_half(n + 1);
    u_half[0] = u_left;
    switch (strategy) {
    case Strategy::exact_f: {
        const auto F_half = accumulate_F(state, grid);
        const double F_left = model.F(u_left);
        for (std::size_t k = 1; k <= n; ++k) {
            // Zero increments keep u exactly at u_left.
            u_half[k] = F_half[k] == 0.0 ? u_left : model.invert_F(F_left + F_half[k]);
        }
        break;
    }
    case Strategy::balanced:
        for (std::size_t j = 0; j < n; ++j) {
            u_half[j + 1] = balanced_edge(model, u_half[j], state.R[j] - state.S[j], grid.dx);
        }
        break;
    case Strategy::march:
        for (std::size_t j = 0; j < n; ++j) {
            u_half[j + 1] = u_half[j] + grid.dx * (state.R[j] - state.S[j]) / (2.0 * model.c(u_half[j]));
        }
        break;
    }
    return u_half;
}

double degeneracy_threshold(const StateRS& state) {
    double m = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        m = std::max(m, std::abs(state.R[j] - state.S[j]));
    }
    return 1e-12 * std::max(1.0, m);
}

CoefficientField compute_coefficients(Strategy strategy, const WaveSpeedModel& model,
                                      std::vector<double> u_half, const StateRS& state,
                                      const Grid& grid) {
    const std::size_t n = state.size();
    if (u_half.size() != n + 1) {
        throw PreconditionError("compute_coefficients: u_half must have n_cells + 1 entries");
    }
    CoefficientField out;
    out.strategy = strategy;
    out.F_half = accumulate_F(state, grid);
    out.c_half.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        out.c_half[k] = model.c(u_half[k]);
    }
    const double eps_deg = degeneracy_threshold(state);
    out.tc.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double d = state.R[j] - state.S[j];
        if (std::abs(d) > eps_deg) {
            out.tc[j] = (out.c_half[j + 1] - out.c_half[j]) / (2.0 * grid.dx * d);
        } else {
            out.tc[j] = model.c_prime(u_half[j]) / (4.0 * out.c_half[j]);
        }
    }
    out.u_half = std::move(u_half);
    return out;
}

CoefficientField build_coefficients(Strategy strategy, const WaveSpeedModel& model,
                                    const StateRS& state, const Grid& grid, double u_left) {
    return compute_coefficients(strategy, model, reconstruct_u(strategy, model, state, grid, u_left),
                                state, grid);
}

double chain_rule_residual(const CoefficientField& coeffs, const StateRS& state, const Grid& grid) {
    const double eps_deg = degeneracy_threshold(state);
    double worst = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        const double d = state.R[j] - state.S[j];
        if (std::abs(d) <= eps_deg) {
            continue;
        }
        const double dc = (coeffs.c_half[j + 1] - coeffs.c_half[j]) / grid.dx;
        worst = std::max(worst, std::abs(dc - 2.0 * coeffs.tc[j] * d));
    }
    return worst;
}

}  // namespace varwave
