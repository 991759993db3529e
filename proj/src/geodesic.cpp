#include "invgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "invgeo/ode.hpp"

namespace invgeo {

namespace {

double speed_sq(const MetricProfile& p, const GeodesicState& st) {
    const double w = p.omega()(st.u);
    return p.E()(st.u) * st.du * st.du + 2.0 * p.F()(st.u) * st.du * st.dv +
           w * w * st.dv * st.dv;
}

} // namespace

Slant clairaut_slant(const MetricProfile& p, const GeodesicState& st) {
    const double w = p.omega()(st.u);
    return {p.F()(st.u) * st.du + w * w * st.dv};
}

GeodesicState state_from_slant(const MetricProfile& p, double u0, double v0, double c,
                               int u_sign) {
    if (!p.domain().contains(u0))
        throw OutOfDomain("launch point outside profile domain");
    const double w = p.omega()(u0);
    if (!(w > 0))
        throw NonpositiveOmega("omega <= 0 at launch point");
    const double rest = 1.0 - c * c / (w * w);
    if (rest < -1e-12)
        throw SlantRegionViolation("slant exceeds omega at the launch point");
    const double du = (u_sign < 0 ? -1.0 : 1.0) * std::sqrt(std::max(rest, 0.0));
    const double dv = (c - p.F()(u0) * du) / (w * w);
    return {0.0, u0, v0, du, dv};
}

GeodesicState state_from_angle(const MetricProfile& p, double u0, double v0,
                               double theta0, int u_sign) {
    const double w = p.omega()(u0);
    return state_from_slant(p, u0, v0, w * std::cos(theta0), u_sign);
}

namespace {

using Ode4 = Rk45<4>;

// The integrator advances (u, v, u', J) where J = F u' + omega^2 v' is the
// momentum conjugate to v. The second geodesic equation is J' = 0, which
// the stepper then satisfies exactly; carrying v' itself instead loses the
// conserved combination omega^2 v' to rounding once omega spans several
// orders of magnitude along the path. u'' comes from the 2x2 system
//   [E  F ] [u'']   [ w w_u v'^2 - E_u u'^2 / 2  ]
//   [F  w^2] [v''] = [ -F_u u'^2 - 2 w w_u u' v' ]
// whose determinant E w^2 - F^2 equals w^2; this form needs no square
// roots and stays valid at turning points where u' = 0.
double u_accel(const MetricProfile& p, double u, double du, double dv) {
    const double F = p.F()(u), w = p.omega()(u);
    const double Eu = p.E().deriv(u), Fu = p.F().deriv(u), wu = p.omega().deriv(u);
    const double b1 = w * wu * dv * dv - 0.5 * Eu * du * du;
    const double b2 = -Fu * du * du - 2.0 * w * wu * du * dv;
    return (w * w * b1 - F * b2) / (w * w);
}

Ode4::Rhs geodesic_rhs(const MetricProfile& p) {
    return [&p](double, const Ode4::State& y, Ode4::State& dy) {
        const double u = y[0], du = y[2], J = y[3];
        const double w = p.omega()(u);
        const double dv = (J - p.F()(u) * du) / (w * w);
        dy[0] = du;
        dy[1] = dv;
        dy[2] = u_accel(p, u, du, dv);
        dy[3] = 0.0;
    };
}

// Root of u'(s) between two accepted nodes, from the cubic Hermite model of
// u' built with the endpoint accelerations.
double refine_turning(const MetricProfile& p, const GeodesicState& a,
                      const GeodesicState& b) {
    const double h = b.s - a.s;
    const double m0 = h * u_accel(p, a.u, a.du, a.dv);
    const double m1 = h * u_accel(p, b.u, b.du, b.dv);
    auto hermite = [&](double t) {
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        const double h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t);
        const double h11 = t * t * (t - 1);
        return h00 * a.du + h10 * m0 + h01 * b.du + h11 * m1;
    };
    double lo = 0.0, hi = 1.0;
    double flo = hermite(lo);
    if (flo == 0.0)
        return a.s;
    if ((flo < 0) == (hermite(hi) < 0)) { // model lost the sign change
        const double span = b.du - a.du;
        return a.s + (span != 0 ? -a.du / span : 0.5) * h;
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = hermite(mid);
        if (f == 0.0)
            return a.s + mid * h;
        if ((f < 0) == (flo < 0)) {
            lo = mid;
            flo = f;
        } else {
            hi = mid;
        }
    }
    return a.s + 0.5 * (lo + hi) * h;
}

GeodesicPath run_integration(const MetricProfile& p, const GeodesicState& init,
                             double s_end, const IntegrationControl& ctrl,
                             const std::function<bool(const GeodesicState&)>& stop) {
    if (!p.domain().contains(init.u))
        throw OutOfDomain("initial u outside profile domain");
    if (std::abs(speed_sq(p, init) - 1.0) > 1e-10)
        throw Error("initial state is not unit speed");

    GeodesicPath path;
    path.slant = clairaut_slant(p, init);
    path.states.push_back(init);

    Ode4::Options opt;
    opt.abs_tol = ctrl.abs_tol;
    opt.rel_tol = ctrl.rel_tol;
    opt.max_step = ctrl.max_step;
    opt.admissible = [&p](const Ode4::State& y) { return p.domain().contains(y[0]); };

    auto record = [&p](double s, const Ode4::State& y) {
        const double w = p.omega()(y[0]);
        const double dv = (y[3] - p.F()(y[0]) * y[2]) / (w * w);
        return GeodesicState{s, y[0], y[1], y[2], dv};
    };
    auto res = Ode4::integrate(
        geodesic_rhs(p), init.s, {init.u, init.v, init.du, path.slant.c}, s_end, opt,
        [&](double, const Ode4::State&, double s, const Ode4::State& y) {
            path.states.push_back(record(s, y));
            return !(stop && stop(path.states.back()));
        });
    path.status = (res.status == Ode4::Status::Blocked) ? PathStatus::DomainExit
                                                        : PathStatus::Completed;

    // diagnostics over the recorded states
    const double c = path.slant.c;
    for (std::size_t i = 0; i < path.states.size(); ++i) {
        const auto& st = path.states[i];
        path.diagnostics.max_speed_drift = std::max(
            path.diagnostics.max_speed_drift, std::abs(speed_sq(p, st) - 1.0));
        path.diagnostics.max_slant_drift = std::max(
            path.diagnostics.max_slant_drift, std::abs(clairaut_slant(p, st).c - c));
        if (i > 0) {
            const auto& prev = path.states[i - 1];
            if ((prev.du < 0) != (st.du < 0) && (prev.du != 0 || st.du != 0))
                path.diagnostics.turning_points.push_back(refine_turning(p, prev, st));
        }
    }
    return path;
}

} // namespace

GeodesicPath integrate_geodesic(const MetricProfile& p, const GeodesicState& init,
                                double length, IntegrationControl ctrl) {
    return run_integration(p, init, init.s + length, ctrl, {});
}

GeodesicPath integrate_until_u(const MetricProfile& p, const GeodesicState& init,
                               double u_target, double s_cap, IntegrationControl ctrl) {
    const double side = init.u < u_target ? 1.0 : -1.0;
    // overshoot slightly so callers can interpolate across the crossing
    auto stop = [u_target, side](const GeodesicState& st) {
        return side * (st.u - u_target) > 1e-9;
    };
    return run_integration(p, init, init.s + s_cap, ctrl, stop);
}

bool is_orbit_geodesic(const MetricProfile& p, double u0, double tol) {
    if (!p.domain().contains(u0))
        throw OutOfDomain("u0 outside profile domain");
    return std::abs(p.omega().deriv(u0)) <= tol;
}

std::vector<double> turning_points(const MetricProfile& p, double c, Interval bracket,
                                   double tol) {
    if (c == 0)
        throw Error("turning_points requires c != 0");
    const double target = std::abs(c);
    auto f = [&](double u) { return p.omega()(u) - target; };

    const int n = 512;
    const Interval win{std::max(bracket.lo, p.domain().lo),
                       std::min(bracket.hi, p.domain().hi)};
    const Interval scan = win.sampling_window();
    std::vector<double> us(n + 1), fs(n + 1);
    for (int i = 0; i <= n; ++i) {
        us[i] = scan.lo + (scan.hi - scan.lo) * (i + 0.5) / (n + 1);
        fs[i] = f(us[i]);
    }

    std::vector<double> roots;
    auto push_root = [&](double r) {
        for (double existing : roots)
            if (std::abs(existing - r) <= 10.0 * tol)
                return;
        roots.push_back(r);
    };

    for (int i = 0; i < n; ++i) {
        if (fs[i] == 0) {
            push_root(us[i]);
        } else if ((fs[i] < 0) != (fs[i + 1] < 0)) {
            push_root(bisect(f, us[i], us[i + 1], tol));
        }
    }
    // tangential touches: local minima of |f| that reach (numerical) zero
    for (int i = 1; i < n; ++i) {
        if (fs[i] > 0 && fs[i] <= fs[i - 1] && fs[i] <= fs[i + 1]) {
            const double m = minimize(f, us[i - 1], us[i + 1], tol);
            if (std::abs(f(m)) <= 1e-12 * std::max(1.0, target))
                push_root(m);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double angle_with_orbit(const MetricProfile& p, const GeodesicState& st,
                        double* clamp_excess) {
    const double w = p.omega()(st.u);
    if (!(w > 0))
        throw NonpositiveOmega("angle_with_orbit: omega <= 0");
    double ct = clairaut_slant(p, st).c / w;
    double excess = 0.0;
    if (std::abs(ct) > 1.0) {
        excess = std::abs(ct) - 1.0;
        ct = std::clamp(ct, -1.0, 1.0);
    }
    if (clamp_excess)
        *clamp_excess = excess > 1e-12 ? excess : 0.0;
    return std::acos(ct);
}

Report first_order_system_check(const MetricProfile& p, const GeodesicPath& path,
                                double tol) {
    if (path.states.empty())
        throw Error("first_order_system_check: empty path");
    bool moves = false;
    for (const auto& st : path.states)
        moves = moves || std::abs(st.du) > tol;
    if (!moves)
        throw NotApplicable("first-order system does not apply to orbits");

    const double c = path.slant.c;
    Report rep;
    for (const auto& st : path.states) {
        const double w = p.omega()(st.u);
        const double r1 = std::abs(p.F()(st.u) * st.du + w * w * st.dv - c);
        const double r2 = std::abs(st.du * st.du - (1.0 - c * c / (w * w)));
        rep.max_residual = std::max({rep.max_residual, r1, r2});
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

} // namespace invgeo
