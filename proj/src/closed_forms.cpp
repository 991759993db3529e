#include "invgeo/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "invgeo/geodesic.hpp"
#include "invgeo/quadrature.hpp"

namespace invgeo {

namespace {

constexpr double kBranchTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

double OmegaSolution::omega(double u) const {
    switch (curvature_case) {
    case CurvatureCase::Positive: {
        const double k = std::sqrt(K);
        return A * std::cos(k * u) + B * std::sin(k * u);
    }
    case CurvatureCase::Negative: {
        const double k = std::sqrt(-K);
        return A * std::cosh(k * u) + B * std::sinh(k * u);
    }
    case CurvatureCase::Flat:
        return A + B * u;
    }
    return 0.0;
}

double OmegaSolution::omega_u(double u) const {
    switch (curvature_case) {
    case CurvatureCase::Positive: {
        const double k = std::sqrt(K);
        return k * (-A * std::sin(k * u) + B * std::cos(k * u));
    }
    case CurvatureCase::Negative: {
        const double k = std::sqrt(-K);
        return k * (A * std::sinh(k * u) + B * std::cosh(k * u));
    }
    case CurvatureCase::Flat:
        return B;
    }
    return 0.0;
}

double OmegaSolution::omega_uu(double u) const { return -K * omega(u); }

HorizontalProfile OmegaSolution::profile() const {
    OmegaSolution self = *this;
    return HorizontalProfile(
        domain,
        ScalarProfile::analytic([self](double u) { return self.omega(u); },
                                [self](double u) { return self.omega_u(u); },
                                [self](double u) { return self.omega_uu(u); }));
}

OmegaSolution solve_omega(double K, double omega0, double domega0) {
    if (!(omega0 > 0))
        throw Error("solve_omega requires omega0 > 0");
    OmegaSolution sol;
    sol.K = K;
    sol.A = omega0;
    if (K > 0) {
        sol.curvature_case = CurvatureCase::Positive;
        const double k = std::sqrt(K);
        sol.B = domega0 / k;
        // omega = C cos(k u - phi) > 0 between the zeros flanking u = 0
        const double phi = std::atan2(sol.B, sol.A);
        constexpr double half_pi = 0.5 * std::numbers::pi;
        sol.domain = Interval((phi - half_pi) / k, (phi + half_pi) / k);
    } else if (K < 0) {
        sol.curvature_case = CurvatureCase::Negative;
        const double k = std::sqrt(-K);
        sol.B = domega0 / k;
        if (std::abs(sol.B) > sol.A) {
            const double u_zero = std::atanh(-sol.A / sol.B) / k;
            sol.domain = sol.B > 0 ? Interval(u_zero, kInf) : Interval(-kInf, u_zero);
        } else {
            sol.domain = Interval::all();
        }
    } else {
        sol.curvature_case = CurvatureCase::Flat;
        sol.B = domega0;
        if (sol.B > 0)
            sol.domain = Interval(-sol.A / sol.B, kInf);
        else if (sol.B < 0)
            sol.domain = Interval(-kInf, -sol.A / sol.B);
        else
            sol.domain = Interval::all();
    }
    return sol;
}

double first_integral_a(CurvatureCase curvature_case, double R, double omega,
                        double domega) {
    switch (curvature_case) {
    case CurvatureCase::Positive:
        return omega * omega + R * R * domega * domega;
    case CurvatureCase::Negative:
        return omega * omega - R * R * domega * domega;
    case CurvatureCase::Flat:
        return domega;
    }
    return 0.0;
}

ClosedFormFamily ClosedFormFamily::positive(double R, double a, double c, double b) {
    if (!(R > 0))
        throw Error("positive curvature requires R > 0");
    if (c == 0)
        throw Error("closed forms require slant c != 0");
    if (!(a > 0) || !(a > c * c))
        throw Error("positive curvature requires a > c^2 > 0");
    return {CurvatureCase::Positive, R, a, b, c};
}

ClosedFormFamily ClosedFormFamily::negative(double R, double a, double c, double b) {
    if (!(R > 0))
        throw Error("negative curvature requires R > 0");
    if (c == 0)
        throw Error("closed forms require slant c != 0");
    return {CurvatureCase::Negative, R, a, b, c};
}

ClosedFormFamily ClosedFormFamily::flat(double a, double c, double b) {
    if (c == 0)
        throw Error("closed forms require slant c != 0");
    return {CurvatureCase::Flat, 1.0, a, b, c};
}

namespace {

double guarded_asin(double arg) {
    if (std::abs(arg) > 1.0 + kBranchTol)
        throw BranchDomainError("arcsin argument outside [-1, 1]");
    return std::asin(std::clamp(arg, -1.0, 1.0));
}

double require_positive(double v, const char* what) {
    if (!(v > 0))
        throw BranchDomainError(std::string(what) + " must be positive here");
    return v;
}

} // namespace

double closed_form_v(const ClosedFormFamily& fam, const OmegaSolution& sol, double u) {
    if (!sol.domain.contains(u))
        throw OutOfDomain("u outside the omega solution's domain");
    const double w = sol.omega(u);
    const double wu = sol.omega_u(u);
    const double c = fam.c, R = fam.R, a = fam.a, b = fam.b;
    const double c2 = c * c;

    switch (fam.curvature_case) {
    case CurvatureCase::Positive:
        return R / std::sqrt(a) * guarded_asin(-c * R / std::sqrt(a - c2) * wu / w) + b;

    case CurvatureCase::Negative: {
        if (std::abs(a) <= kBranchTol) { // a = 0
            const double rad = require_positive(w * w - c2, "omega^2 - c^2");
            if (wu == 0)
                throw BranchDomainError("omega' vanishes in the a = 0 branch");
            return std::sqrt(rad) / (c * wu) + b;
        }
        if (std::abs(a - c2) <= kBranchTol) { // a = c^2
            if (wu == 0)
                throw BranchDomainError("omega' vanishes in the a = c^2 branch");
            return R / (2.0 * c) * std::log(wu * wu / (w * w)) + b;
        }
        if (a < 0)
            return R / std::sqrt(-a) *
                       guarded_asin(-c * R / std::sqrt(c2 - a) * wu / w) + b;
        if (a < c2) { // 0 < a < c^2
            const double rad = require_positive(a * (w * w - c2), "a (omega^2 - c^2)");
            const double num = c * R * wu + std::sqrt(rad);
            const double den = w * std::sqrt(c2 - a);
            return R / std::sqrt(a) * std::log(require_positive(num / den, "log argument")) + b;
        }
        // a > c^2
        return R / std::sqrt(a) * std::asinh(c * R / std::sqrt(a - c2) * wu / w) + b;
    }

    case CurvatureCase::Flat: {
        const double rad = require_positive(w * w - c2, "omega^2 - c^2");
        if (std::abs(a) <= kBranchTol)
            return c / (w * std::sqrt(rad)) * u + b; // omega is constant here
        return std::atan(c / std::sqrt(rad)) / a + b;
    }
    }
    return b;
}

Report crosscheck_closed_form(const ClosedFormFamily& fam, const OmegaSolution& sol,
                              Interval u_range, double c, double tol) {
    const HorizontalProfile prof = sol.profile();
    const MetricProfile& metric = prof.metric();

    const int n = 41;
    std::vector<double> us(n), v_closed(n);
    for (int i = 0; i < n; ++i) {
        us[i] = u_range.lo + (u_range.hi - u_range.lo) * i / (n - 1);
        v_closed[i] = closed_form_v(fam, sol, us[i]);
    }

    const auto quad =
        geodesic_by_quadrature(metric, c, u_range.lo, 0.0, u_range.hi, +1, 1e-10, n);

    // geodesic launched across the range, v(u) sampled by Hermite interpolation
    IntegrationControl ctrl;
    ctrl.max_step = 0.02;
    const auto start = state_from_slant(metric, u_range.lo, 0.0, c, +1);
    const auto path = integrate_until_u(metric, start, u_range.hi, 1e4, ctrl);
    std::vector<double> v_ode(n);
    {
        std::size_t j = 0;
        for (int i = 0; i < n; ++i) {
            while (j + 2 < path.states.size() && path.states[j + 1].u < us[i])
                ++j;
            const auto& p0 = path.states[j];
            const auto& p1 = path.states[j + 1];
            const double h = p1.u - p0.u;
            const double t = std::clamp((us[i] - p0.u) / h, 0.0, 1.0);
            const double m0 = p0.dv / p0.du, m1 = p1.dv / p1.du; // dv/du at nodes
            const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
            const double h10 = t * (1 - t) * (1 - t);
            const double h01 = t * t * (3 - 2 * t);
            const double h11 = t * t * (t - 1);
            v_ode[i] = h00 * p0.v + h10 * h * m0 + h01 * p1.v + h11 * h * m1;
        }
    }

    // compare modulo additive constant and branch sign
    auto deviation = [&](const std::vector<double>& other) {
        const int mid = n / 2;
        double best = kInf;
        for (double sign : {1.0, -1.0}) {
            double dev = 0.0;
            for (int i = 0; i < n; ++i) {
                const double d = sign * (other[i] - other[mid]) -
                                 (v_closed[i] - v_closed[mid]);
                dev = std::max(dev, std::abs(d));
            }
            best = std::min(best, dev);
        }
        return best;
    };

    Report rep;
    rep.max_residual = std::max(deviation(quad.v_values), deviation(v_ode));
    rep.pass = rep.max_residual <= tol;
    return rep;
}

} // namespace invgeo
