#pragma once

#include <functional>
#include <string>

namespace varwave {

enum class SpeedKind { arctan, liquid_crystal, constant, custom };

/// Wave speed c(u) together with its derivative, the antiderivative
/// F(u) = int_0^u 2 c(v) dv and the inverse of F.
///
/// Models are immutable after construction and every member is safe to call
/// from several threads at once. The bounds satisfy
/// 0 < c_min() <= c(u) <= c_max() and |c'(u)| <= cprime_max().
class WaveSpeedModel {
public:
    /// c(u) = (2/pi)(pi + arctan u); c in (1, 3), c' in (0, 2/pi].
    static WaveSpeedModel arctan();
    /// c(u) = sqrt(alpha cos^2 u + beta sin^2 u). Monotone only when alpha == beta.
    static WaveSpeedModel liquid_crystal(double alpha, double beta);
    static WaveSpeedModel constant(double c0);
    /// User supplied speed. F is evaluated by adaptive quadrature.
    static WaveSpeedModel custom(std::function<double(double)> c,
                                 std::function<double(double)> c_prime,
                                 double c_min, double c_max, double cprime_max,
                                 bool monotone);

    double c(double u) const;
    double c_prime(double u) const;
    double F(double u) const;
    /// Returns u with |F(u) - f| <= 1e-12 max(1, |f|).
    /// Throws BracketFailure when no bracket exists within |u| <= 1e9.
    double invert_F(double f) const;

    SpeedKind kind() const noexcept { return kind_; }
    double c_min() const noexcept { return c_min_; }
    double c_max() const noexcept { return c_max_; }
    double cprime_max() const noexcept { return cprime_max_; }
    /// Whether c' >= 0 everywhere.
    bool monotone() const noexcept { return monotone_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double c0() const noexcept { return c0_; }
    std::string name() const;

private:
    WaveSpeedModel() = default;
    double integrate_2c(double a, double b) const;

    SpeedKind kind_ = SpeedKind::constant;
    double alpha_ = 1.0;
    double beta_ = 1.0;
    double c0_ = 1.0;
    double c_min_ = 1.0;
    double c_max_ = 1.0;
    double cprime_max_ = 0.0;
    bool monotone_ = true;
    double F_period_ = 0.0;  // F(pi) for liquid_crystal
    std::function<double(double)> custom_c_;
    std::function<double(double)> custom_c_prime_;
};

inline double eval_c(const WaveSpeedModel& m, double u) { return m.c(u); }
inline double eval_c_prime(const WaveSpeedModel& m, double u) { return m.c_prime(u); }
inline double eval_F(const WaveSpeedModel& m, double u) { return m.F(u); }
inline double invert_F(const WaveSpeedModel& m, double f) { return m.invert_F(f); }

}  // namespace varwave
