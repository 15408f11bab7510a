#pragma once

#include "varwave/coefficients.hpp"
#include "varwave/grid.hpp"
#include "varwave/wavespeed.hpp"

#include <vector>

namespace varwave {

/// Time derivatives of the upwind scheme
///   dR_j =  c_{j+1/2} D+R_j + tc_j (R_j^2 - S_j^2)
///   dS_j = -c_{j-1/2} D-S_j - tc_j (R_j^2 - S_j^2)
/// with zero ghost cells, plus the coefficients they were built from.
struct RhsEval {
    std::vector<double> dR;
    std::vector<double> dS;
    CoefficientField coeffs;
};

/// Applies the upwind operator with coefficients already in hand.
RhsEval upwind_rhs(const StateRS& state, const Grid& grid, CoefficientField coeffs);

/// Rebuilds the coefficients from the state, then applies the upwind operator.
RhsEval rhs(const StateRS& state, const Grid& grid, const WaveSpeedModel& model, Strategy strategy,
            double u_left = 0.0);

}  // namespace varwave
