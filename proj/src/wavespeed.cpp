#include "varwave/wavespeed.hpp"

#include "varwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace varwave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadratureTol = 1e-12;
constexpr double kPanelWidth = 0.25;
constexpr unsigned kPanelDepth = 6;
constexpr double kInvertTol = 1e-12;
constexpr double kBracketLimit = 1e9;

}  // namespace

WaveSpeedModel WaveSpeedModel::arctan() {
    WaveSpeedModel m;
    m.kind_ = SpeedKind::arctan;
    m.c_min_ = 1.0;
    m.c_max_ = 3.0;
    m.cprime_max_ = 2.0 / kPi;
    m.monotone_ = true;
    return m;
}

WaveSpeedModel WaveSpeedModel::liquid_crystal(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw PreconditionError("liquid_crystal model needs alpha > 0 and beta > 0");
    }
    WaveSpeedModel m;
    m.kind_ = SpeedKind::liquid_crystal;
    m.alpha_ = alpha;
    m.beta_ = beta;
    m.c_min_ = std::sqrt(std::min(alpha, beta));
    m.c_max_ = std::sqrt(std::max(alpha, beta));
    m.cprime_max_ = std::abs(beta - alpha) / (2.0 * m.c_min_);
    // c' = (beta - alpha) sin(2u) / (2c) changes sign unless alpha == beta.
    m.monotone_ = (alpha == beta);
    m.F_period_ = m.integrate_2c(0.0, kPi);
    return m;
}

WaveSpeedModel WaveSpeedModel::constant(double c0) {
    if (!(c0 > 0.0) || !std::isfinite(c0)) {
        throw PreconditionError("constant model needs c0 > 0");
    }
    WaveSpeedModel m;
    m.kind_ = SpeedKind::constant;
    m.c0_ = c0;
    m.c_min_ = c0;
    m.c_max_ = c0;
    m.cprime_max_ = 0.0;
    m.monotone_ = true;
    return m;
}

WaveSpeedModel WaveSpeedModel::custom(std::function<double(double)> c,
                                      std::function<double(double)> c_prime,
                                      double c_min, double c_max, double cprime_max,
                                      bool monotone) {
    if (!c || !c_prime) {
        throw PreconditionError("custom model needs both c and c'");
    }
    if (!(c_min > 0.0) || !(c_max >= c_min) || !(cprime_max >= 0.0)) {
        throw PreconditionError("custom model needs 0 < c_min <= c_max and cprime_max >= 0");
    }
    WaveSpeedModel m;
    m.kind_ = SpeedKind::custom;
    m.custom_c_ = std::move(c);
    m.custom_c_prime_ = std::move(c_prime);
    m.c_min_ = c_min;
    m.c_max_ = c_max;
    m.cprime_max_ = cprime_max;
    m.monotone_ = monotone;
    return m;
}

double WaveSpeedModel::c(double u) const {
    switch (kind_) {
    case SpeedKind::arctan:
        return (2.0 / kPi) * (kPi + std::atan(u));
    case SpeedKind::liquid_crystal: {
        const double cs = std::cos(u);
        const double sn = std::sin(u);
        // Clamped so rounding never leaves [c_min, c_max].
        return std::clamp(std::sqrt(alpha_ * cs * cs + beta_ * sn * sn), c_min_, c_max_);
    }
    case SpeedKind::constant:
        return c0_;
    case SpeedKind::custom:
        return custom_c_(u);
    }
    return c0_;
}

double WaveSpeedModel::c_prime(double u) const {
    switch (kind_) {
    case SpeedKind::arctan:
        return (2.0 / kPi) / (1.0 + u * u);
    case SpeedKind::liquid_crystal:
        return (beta_ - alpha_) * std::sin(u) * std::cos(u) / c(u);
    case SpeedKind::constant:
        return 0.0;
    case SpeedKind::custom:
        return custom_c_prime_(u);
    }
    return 0.0;
}

double WaveSpeedModel::integrate_2c(double a, double b) const {
    if (a == b) {
        return 0.0;
    }
    // Adaptive Gauss-Kronrod on short panels with shallow recursion: the error
    // estimate has an absolute floor near 1e-15, so one adaptive call over a
    // long or tiny interval at this tolerance would recurse to full depth.
    auto integrand = [this](double v) { return 2.0 * c(v); };
    const auto panels = static_cast<std::size_t>(std::ceil(std::abs(b - a) / kPanelWidth));
    const double h = (b - a) / static_cast<double>(panels);
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = a + static_cast<double>(i) * h;
        const double hi = i + 1 == panels ? b : lo + h;
        double panel_error = 0.0;
        double panel_l1 = 0.0;
        value += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, lo, hi, kPanelDepth, kQuadratureTol, &panel_error, &panel_l1);
        error += panel_error;
        l1 += panel_l1;
    }
    if (!std::isfinite(value) || error > kQuadratureTol * std::max(1.0, l1)) {
        std::ostringstream msg;
        msg << "quadrature of 2c on [" << a << ", " << b << "] reached error " << error;
        throw QuadratureFailure(msg.str());
    }
    return value;
}

double WaveSpeedModel::F(double u) const {
    switch (kind_) {
    case SpeedKind::arctan:
        // 2c integrates to 4u + (4/pi)(u atan u - log(1 + u^2)/2)
        return 4.0 * u + (4.0 / kPi) * (u * std::atan(u) - 0.5 * std::log1p(u * u));
    case SpeedKind::constant:
        return 2.0 * c0_ * u;
    case SpeedKind::liquid_crystal: {
        // c^2 has period pi, so F(u + pi) = F(u) + F(pi).
        const double periods = std::floor(u / kPi);
        const double rest = u - periods * kPi;
        return periods * F_period_ + integrate_2c(0.0, rest);
    }
    case SpeedKind::custom:
        return integrate_2c(0.0, u);
    }
    return 0.0;
}

double WaveSpeedModel::invert_F(double f) const {
    if (!std::isfinite(f)) {
        throw BracketFailure("invert_F: non-finite target");
    }
    if (f == 0.0) {
        return 0.0;
    }
    const double tol = kInvertTol * std::max(1.0, std::abs(f));

    // Grow a bracket geometrically away from u = 0 using the monotonicity of F.
    const double sign = f > 0.0 ? 1.0 : -1.0;
    double near = 0.0;
    double far = sign;
    double F_far = F(far);
    while (sign * (F_far - f) < 0.0) {
        near = far;
        far *= 2.0;
        if (std::abs(far) > kBracketLimit) {
            std::ostringstream msg;
            msg << "invert_F: no bracket for f = " << f << " within |u| <= 1e9";
            throw BracketFailure(msg.str());
        }
        F_far = F(far);
    }
    double lo = std::min(near, far);
    double hi = std::max(near, far);

    double u = 0.5 * (lo + hi);
    double residual = F(u) - f;
    for (int iter = 0; iter < 200; ++iter) {
        if (residual < 0.0) {
            lo = u;
        } else if (residual > 0.0) {
            hi = u;
        } else {
            return u;
        }
        const double slope = 2.0 * c(u);
        double next = u - residual / slope;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - u);
        u = next;
        residual = F(u) - f;
        const double ulp_scale = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(u));
        if (std::abs(residual) <= tol && (step <= ulp_scale || hi - lo <= ulp_scale)) {
            return u;
        }
    }
    if (std::abs(residual) <= tol) {
        return u;
    }
    std::ostringstream msg;
    msg << "invert_F: residual " << residual << " above tolerance for f = " << f;
    throw BracketFailure(msg.str());
}

std::string WaveSpeedModel::name() const {
    std::ostringstream out;
    switch (kind_) {
    case SpeedKind::arctan:
        return "arctan";
    case SpeedKind::liquid_crystal:
        out << "liquid_crystal(alpha=" << alpha_ << ", beta=" << beta_ << ")";
        return out.str();
    case SpeedKind::constant:
        out << "constant(c0=" << c0_ << ")";
        return out.str();
    case SpeedKind::custom:
        return "custom";
    }
    return "unknown";
}

}  // namespace varwave
