#include "varwave/grid.hpp"

#include "varwave/errors.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace varwave {

Grid make_grid(double x_min, double x_max, std::size_t n_cells) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
        std::ostringstream msg;
        msg << "grid needs x_max > x_min, got [" << x_min << ", " << x_max << "]";
        throw InvalidGrid(msg.str());
    }
    if (n_cells < 3) {
        throw InvalidGrid("grid needs at least 3 cells, got " + std::to_string(n_cells));
    }
    return Grid{x_min, x_max, n_cells, (x_max - x_min) / static_cast<double>(n_cells)};
}

bool StateRS::finite() const {
    for (std::size_t j = 0; j < R.size(); ++j) {
        if (!std::isfinite(R[j]) || !std::isfinite(S[j])) {
            return false;
        }
    }
    return true;
}

double StateRS::max_abs() const {
    double m = 0.0;
    for (std::size_t j = 0; j < R.size(); ++j) {
        m = std::max({m, std::abs(R[j]), std::abs(S[j])});
    }
    return m;
}

std::vector<double> project_cell_averages(const std::function<double(double)>& fn, const Grid& grid) {
    // Gauss-Legendre nodes and weights on [-1, 1].
    static constexpr std::array<double, 5> nodes = {
        -0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
        0.5384693101056830910363144, 0.9061798459386639927976269};
    static constexpr std::array<double, 5> weights = {
        0.2369268850561890875142640, 0.4786286704993664680412915, 0.5688888888888888888888889,
        0.4786286704993664680412915, 0.2369268850561890875142640};

    std::vector<double> avg(grid.n_cells);
    const double half = 0.5 * grid.dx;
    for (std::size_t j = 0; j < grid.n_cells; ++j) {
        const double mid = grid.center(j);
        double sum = 0.0;
        for (std::size_t q = 0; q < nodes.size(); ++q) {
            sum += weights[q] * fn(mid + half * nodes[q]);
        }
        avg[j] = 0.5 * sum;
    }
    return avg;
}

double piecewise_constant_eval(std::span<const double> values, const Grid& grid, double x) {
    if (!(x >= grid.x_min) || !(x < grid.x_max)) {
        return 0.0;
    }
    auto j = static_cast<std::ptrdiff_t>(std::floor((x - grid.x_min) / grid.dx));
    const auto n = static_cast<std::ptrdiff_t>(grid.n_cells);
    // Resolve rounding near edges against the edge positions themselves.
    if (j >= n) {
        j = n - 1;
    }
    if (j < 0) {
        j = 0;
    }
    while (j + 1 < n && x >= grid.edge(static_cast<std::size_t>(j + 1))) {
        ++j;
    }
    while (j > 0 && x < grid.edge(static_cast<std::size_t>(j))) {
        --j;
    }
    if (static_cast<std::size_t>(j) >= values.size()) {
        return 0.0;
    }
    return values[static_cast<std::size_t>(j)];
}

double lp_norm(std::span<const double> values, const Grid& grid, double p) {
    if (!(p >= 1.0)) {
        throw PreconditionError("lp_norm needs p >= 1");
    }
    double sum = 0.0;
    if (p == 1.0) {
        for (double v : values) {
            sum += std::abs(v);
        }
        return grid.dx * sum;
    }
    if (p == 2.0) {
        for (double v : values) {
            sum += v * v;
        }
        return std::sqrt(grid.dx * sum);
    }
    for (double v : values) {
        sum += std::pow(std::abs(v), p);
    }
    return std::pow(grid.dx * sum, 1.0 / p);
}

}  // namespace varwave
