#pragma once

#include "varwave/grid.hpp"
#include "varwave/wavespeed.hpp"

#include <string>
#include <vector>

namespace varwave {

/// How the edge values u_{j+1/2} are recovered from (R, S).
enum class Strategy {
    exact_f,   ///< u = F^{-1}(running sum of dx (R - S))
    balanced,  ///< D+u = (R - S) / (c(u_{j-1/2}) + c(u_{j+1/2})), one scalar solve per edge
    march,     ///< D+u = (R - S) / (2 c(u_{j-1/2})), explicit
};

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy s);

/// Edge and cell coefficients of the upwind scheme. Arrays over edges have
/// n_cells + 1 entries: index k is the edge x_{k-1/2}, so cell j sits between
/// edges j and j + 1.
struct CoefficientField {
    std::vector<double> F_half;
    std::vector<double> u_half;
    std::vector<double> c_half;
    std::vector<double> tc;
    Strategy strategy = Strategy::exact_f;
};

/// F_half[0] = 0, F_half[j+1] = F_half[j] + dx (R_j - S_j), summed ascending.
std::vector<double> accumulate_F(const StateRS& state, const Grid& grid);

/// One step of the balanced recurrence: solves
/// v = u_prev + dx d / (c(u_prev) + c(v)) by safeguarded Newton.
double balanced_edge(const WaveSpeedModel& model, double u_prev, double d, double dx);

/// Edge values of u under the given strategy, starting from u_left at the
/// leftmost edge. Throws NewtonFailure (balanced) or BracketFailure (exact_f).
std::vector<double> reconstruct_u(Strategy strategy, const WaveSpeedModel& model,
                                  const StateRS& state, const Grid& grid, double u_left);

/// Threshold below which a cell counts as degenerate (R_j ~ S_j).
double degeneracy_threshold(const StateRS& state);

/// Edge speeds and the source coefficient
///   tc_j = (c_{j+1/2} - c_{j-1/2}) / (2 dx (R_j - S_j)),
/// so that D+ c_{j-1/2} = 2 tc_j (R_j - S_j) holds to rounding. Degenerate
/// cells fall back to the limit c'(u)/(4 c(u)) at the left edge.
CoefficientField compute_coefficients(Strategy strategy, const WaveSpeedModel& model,
                                      std::vector<double> u_half, const StateRS& state,
                                      const Grid& grid);

/// reconstruct_u followed by compute_coefficients.
CoefficientField build_coefficients(Strategy strategy, const WaveSpeedModel& model,
                                    const StateRS& state, const Grid& grid, double u_left);

/// max_j |D+ c_{j-1/2} - 2 tc_j (R_j - S_j)| over nondegenerate cells.
double chain_rule_residual(const CoefficientField& coeffs, const StateRS& state, const Grid& grid);

}  // namespace varwave
