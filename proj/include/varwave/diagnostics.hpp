#pragma once

#include "varwave/coefficients.hpp"
#include "varwave/grid.hpp"
#include "varwave/rhs.hpp"

#include <set>
#include <string>
#include <vector>

namespace varwave {

/// Scalars logged along a trajectory.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;       ///< dx sum (R^2 + S^2)
    double l1 = 0.0;           ///< dx sum (|R| + |S|)
    double l3 = 0.0;           ///< (dx sum (|R|^3 + |S|^3))^(1/3)
    double diss_cum = 0.0;     ///< time integral of the dissipation
    double r_max = 0.0;
    double s_max = 0.0;
    double r_min = 0.0;
    double s_min = 0.0;
    double hlem_residual_max = 0.0;
    double hi_alpha = 0.0;     ///< time integral of the higher-integrability density
};

enum class Check { energy, ledger, invariant_domain, lp_monotone, hlem, hi_alpha_monotone };

std::string to_string(Check check);
Check parse_check(const std::string& name);

struct DiagnosticsConfig {
    double alpha = 0.5;
    double window_a = -10.0;
    double window_b = 10.0;
    std::size_t every_n_steps = 1;
    std::set<Check> enabled_checks;

    /// Throws PreconditionError unless 0 <= alpha < 1 and window_a < window_b.
    void validate() const;
};

double energy(const StateRS& state, const Grid& grid);

/// dx sum_j dx (c_{j+1/2} (D+R_j)^2 + c_{j-1/2} (D-S_j)^2), ghost cells zero.
double dissipation(const StateRS& state, const CoefficientField& coeffs, const Grid& grid);

/// Per-cell residual of the discrete energy identity
///   d/dt (R_j^2 + S_j^2) = D+(c_{j-1/2} R_j^2) - D-(c_{j+1/2} S_j^2)
///                          - dx (c_{j+1/2} (D+R_j)^2 + c_{j-1/2} (D-S_j)^2),
/// maximised over j. Exact in real arithmetic.
double hlem_residual(const StateRS& state, const RhsEval& rhs_eval, const Grid& grid);

struct InvariantReport {
    bool sign_ok = true;
    bool lower_ok = true;
    /// Largest excursion outside [-M, 0]; zero inside.
    double worst = 0.0;
};

/// Checks R, S in [-M, 0] with tolerance 1e-8 max(1, M).
InvariantReport check_invariant_domain(const StateRS& state, double M);

/// 1 on [a, b], 0 outside [a - 1, b + 1], cubic smoothstep in between.
double smooth_cutoff(double x, double a, double b);

/// dx sum_j chi(x_j) tc_j |R_j - S_j|^(2 + alpha).
double higher_integrability_increment(const StateRS& state, const CoefficientField& coeffs,
                                      const Grid& grid, const DiagnosticsConfig& cfg);

/// Accumulates records along a run. The dissipation integral is supplied by
/// the stepper; hi_alpha is integrated here with the trapezoid rule.
class DiagnosticsLog {
public:
    DiagnosticsLog(const Grid& grid, DiagnosticsConfig cfg);

    /// Registers the state at the start of the run.
    void start(const StateRS& state, const RhsEval& at_state);
    /// Registers the state reached after a step of length dt. `diss_increment`
    /// is the stepper's quadrature of the dissipation over the step.
    void advance(const StateRS& state, const RhsEval& at_state, double dt, double diss_increment,
                 bool force_record);

    const std::vector<DiagnosticsRecord>& records() const { return records_; }
    const DiagnosticsConfig& config() const { return cfg_; }

private:
    DiagnosticsRecord measure(const StateRS& state, const RhsEval& at_state) const;

    Grid grid_;
    DiagnosticsConfig cfg_;
    std::vector<DiagnosticsRecord> records_;
    double diss_cum_ = 0.0;
    double hi_alpha_ = 0.0;
    double last_hi_increment_ = 0.0;
    std::size_t steps_ = 0;
};

/// Pass/fail of one invariant check over a run.
struct CheckResult {
    Check check;
    bool passed = true;
    std::string detail;
};

struct CheckTolerances {
    double energy_rel = 1e-7;
    double ledger_rel = 1e-7;
    double lp_rel = 1e-7;
    double hlem_coeff = 1e-11;  ///< times scale^3 / dx
    double hi_alpha_abs = 1e-12;
};

/// Evaluates the enabled checks against logged records. `M` is the lower
/// bound of the invariant domain.
std::vector<CheckResult> evaluate_checks(const std::vector<DiagnosticsRecord>& records,
                                         const std::set<Check>& checks, double M,
                                         const Grid& grid, const CheckTolerances& tol = {});

}  // namespace varwave
