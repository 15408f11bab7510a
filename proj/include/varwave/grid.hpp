#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace varwave {

/// Uniform lattice on [x_min, x_max) with cells I_j = [x_{j-1/2}, x_{j+1/2}).
struct Grid {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t n_cells = 0;
    double dx = 0.0;

    double center(std::size_t j) const { return x_min + (static_cast<double>(j) + 0.5) * dx; }
    /// Edge k sits at x_min + k dx, so cell j spans edges j and j + 1.
    double edge(std::size_t k) const { return x_min + static_cast<double>(k) * dx; }
    std::size_t n_edges() const { return n_cells + 1; }
};

/// Throws InvalidGrid unless x_max > x_min and n_cells >= 3.
Grid make_grid(double x_min, double x_max, std::size_t n_cells);

/// Per-cell Riemann invariants at one time level. Cells outside
/// [0, n_cells) are ghost cells holding zero.
struct StateRS {
    double t = 0.0;
    std::vector<double> R;
    std::vector<double> S;

    static StateRS zeros(const Grid& grid, double t = 0.0) {
        return StateRS{t, std::vector<double>(grid.n_cells, 0.0), std::vector<double>(grid.n_cells, 0.0)};
    }
    std::size_t size() const { return R.size(); }
    bool finite() const;
    /// max over cells of max(|R_j|, |S_j|)
    double max_abs() const;
};

/// Cell averages (1/dx) int_{I_j} fn dx by 5-point Gauss-Legendre per cell.
std::vector<double> project_cell_averages(const std::function<double(double)>& fn, const Grid& grid);

/// values[j] for x in I_j, zero outside the grid.
double piecewise_constant_eval(std::span<const double> values, const Grid& grid, double x);

/// (dx sum_j |v_j|^p)^(1/p), summed in ascending j.
double lp_norm(std::span<const double> values, const Grid& grid, double p);

}  // namespace varwave
