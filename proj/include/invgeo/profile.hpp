#pragma once

#include <functional>
#include <utility>

#include "invgeo/interval.hpp"
#include "invgeo/numerics.hpp"

namespace invgeo {

enum class Provenance { Analytic, FiniteDifference };

/// A scalar function of the profile parameter u together with its first two
/// derivatives. Profiles are assumed C^2 on their domain; derivatives come
/// either from closed-form expressions or from second-order finite
/// differences (central stencils, one-sided near the ends of a bounded
/// domain).
class ScalarProfile {
public:
    static ScalarProfile analytic(Fn1 f, Fn1 df, Fn1 d2f) {
        ScalarProfile p;
        p.eval_ = std::move(f);
        p.deriv_ = std::move(df);
        p.deriv2_ = std::move(d2f);
        return p;
    }

    /// Derivatives of f by finite differences with base step `step_base`
    /// (the effective step grows as max(step_base, 1e-7*|u|)).
    static ScalarProfile finite_difference(Fn1 f, Interval domain, double step_base = 1e-5);

    static ScalarProfile constant(double value) {
        auto zero = [](double) { return 0.0; };
        return analytic([value](double) { return value; }, zero, zero);
    }

    /// Builds omega = sqrt(W) from an analytic square W(u) > 0.
    static ScalarProfile sqrt_of(Fn1 W, Fn1 dW, Fn1 d2W);

    double operator()(double u) const { return eval_(u); }
    double deriv(double u) const { return deriv_(u); }
    double deriv2(double u) const { return deriv2_(u); }

    Provenance provenance() const { return provenance_; }
    double step_base() const { return step_base_; }

private:
    ScalarProfile() = default;
    Fn1 eval_, deriv_, deriv2_;
    Provenance provenance_ = Provenance::Analytic;
    double step_base_ = 0.0;
};

/// Intrinsic data of an invariant surface: first fundamental form
/// coefficients E, F and the orbit-speed function omega on an interval of
/// the profile parameter. G is never stored; it is always omega^2.
class MetricProfile {
public:
    MetricProfile(Interval domain, ScalarProfile E, ScalarProfile F, ScalarProfile omega)
        : domain_(domain), E_(std::move(E)), F_(std::move(F)), omega_(std::move(omega)) {}

    const Interval& domain() const { return domain_; }
    const ScalarProfile& E() const { return E_; }
    const ScalarProfile& F() const { return F_; }
    const ScalarProfile& omega() const { return omega_; }

    double G(double u) const {
        const double w = omega_(u);
        return w * w;
    }

    bool horizontal() const { return horizontal_; }

private:
    friend class HorizontalProfile;
    Interval domain_;
    ScalarProfile E_, F_, omega_;
    bool horizontal_ = false;
};

/// A metric profile with E = 1 and F = 0 (profile curve lifted
/// orthogonally to the orbits).
class HorizontalProfile {
public:
    HorizontalProfile(Interval domain, ScalarProfile omega)
        : metric_(domain, ScalarProfile::constant(1.0), ScalarProfile::constant(0.0),
                  std::move(omega)) {
        metric_.horizontal_ = true;
    }

    const MetricProfile& metric() const { return metric_; }
    operator const MetricProfile&() const { return metric_; }

private:
    MetricProfile metric_;
};

struct Report {
    double max_residual = 0.0;
    bool pass = false;
};

/// Checks the structural identity E*omega^2 - F^2 = omega^2 on a uniform
/// grid (midpoint samples of the domain's sampling window).
Report validate_metric_identity(const MetricProfile& p, int samples, double tol);

/// Gauss curvature K(u) = -omega''(u) / omega(u).
double gauss_curvature(const MetricProfile& p, double u);

/// Checks omega'' + K*omega = 0 on a uniform grid; constant curvature K
/// holds exactly when this residual vanishes.
Report verify_constant_curvature(const MetricProfile& p, double K, int samples, double tol);

} // namespace invgeo
