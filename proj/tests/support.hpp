#pragma once

#include "varwave/grid.hpp"
#include "varwave/wavespeed.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace testsupport {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    }
    return sum * h / 3.0;
}

/// F(u) = int_0^u 2c by quadrature, independent of the library's closed forms.
inline double quadrature_F(const varwave::WaveSpeedModel& m, double u) {
    return simpson([&](double v) { return 2.0 * m.c(v); }, 0.0, u);
}

/// Root of an increasing function by plain bisection.
inline double bisect(const std::function<double(double)>& g, double lo, double hi, int iters = 200) {
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// The closed-form arctan antiderivative, written out independently.
inline double arctan_F_oracle(double u) {
    return 4.0 * u + (4.0 / std::numbers::pi) * (u * std::atan(u) - 0.5 * std::log(1.0 + u * u));
}

/// Random state with entries in [lo, hi], smooth enough to be interesting.
inline varwave::StateRS random_state(const varwave::Grid& grid, std::mt19937_64& rng, double lo = -1.0,
                                     double hi = 0.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    varwave::StateRS s = varwave::StateRS::zeros(grid);
    for (std::size_t j = 0; j < grid.n_cells; ++j) {
        s.R[j] = dist(rng);
        s.S[j] = dist(rng);
    }
    return s;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace testsupport
