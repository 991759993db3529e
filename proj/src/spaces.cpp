#include "invgeo/spaces.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "invgeo/ode.hpp"

namespace invgeo {

namespace {

constexpr double kPi = std::numbers::pi;

bool in_h2(const AmbientPoint& p) { return p.y > 0; }

void require_in_domain(const AmbientSpace& space, const AmbientPoint& p) {
    if (std::holds_alternative<H2xR_G24>(space) ||
        std::holds_alternative<H2xR_G34>(space) ||
        std::holds_alternative<H2xR_G14>(space)) {
        if (!in_h2(p))
            throw OutOfDomain("H^2 x R requires y > 0");
    } else if (const auto* bcv = std::get_if<BCV>(&space)) {
        if (bcv->m < 0 && p.x * p.x + p.y * p.y >= -1.0 / bcv->m)
            throw OutOfDomain("BCV point outside the chart r^2 < -1/m");
    }
}

double sq(double v) { return v * v; }

} // namespace

Vec3 killing_field(const AmbientSpace& space, const AmbientPoint& p) {
    require_in_domain(space, p);
    return std::visit(
        [&](const auto& s) -> Vec3 {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>)
                return {p.y, -p.x, 0.0};
            else if constexpr (std::is_same_v<T, H2xR_G24>)
                return {s.a, 0.0, s.b};
            else if constexpr (std::is_same_v<T, H2xR_G34>)
                return {p.x, p.y, s.b};
            else if constexpr (std::is_same_v<T, H2xR_G14>)
                return {0.5 * (p.x * p.x - p.y * p.y + 1.0), p.x * p.y, s.b};
            else // BCV: same rotational field as in R^3
                return {p.y, -p.x, 0.0};
        },
        space);
}

double metric_dot(const AmbientSpace& space, const AmbientPoint& p,
                  const Vec3& v, const Vec3& w) {
    require_in_domain(space, p);
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>) {
                return v[0] * w[0] + v[1] * w[1] + v[2] * w[2];
            } else if constexpr (std::is_same_v<T, BCV>) {
                const double D = 1.0 + s.m * (p.x * p.x + p.y * p.y);
                const double plane = (v[0] * w[0] + v[1] * w[1]) / (D * D);
                auto eta = [&](const Vec3& t) {
                    return t[2] + 0.5 * s.ell * (p.y * t[0] - p.x * t[1]) / D;
                };
                return plane + eta(v) * eta(w);
            } else { // the three H^2 x R groups share the product metric
                return (v[0] * w[0] + v[1] * w[1]) / (p.y * p.y) + v[2] * w[2];
            }
        },
        space);
}

double omega_at(const AmbientSpace& space, const AmbientPoint& p) {
    require_in_domain(space, p);
    const double w2 = std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>) {
                return p.x * p.x + p.y * p.y;
            } else if constexpr (std::is_same_v<T, H2xR_G24>) {
                return (s.a * s.a + s.b * s.b * p.y * p.y) / (p.y * p.y);
            } else if constexpr (std::is_same_v<T, H2xR_G34>) {
                // polar angle alpha in (0, pi): sin(alpha) = y / r
                const double r2 = p.x * p.x + p.y * p.y;
                const double sin2 = p.y * p.y / r2;
                return (1.0 + s.b * s.b * sin2) / sin2;
            } else if constexpr (std::is_same_v<T, H2xR_G14>) {
                const double beta = (1.0 + p.x * p.x + p.y * p.y) / p.y;
                return 0.25 * beta * beta + s.b * s.b - 1.0;
            } else { // BCV
                const double r2 = p.x * p.x + p.y * p.y;
                const double D = 1.0 + s.m * r2;
                return r2 * (4.0 + s.ell * s.ell * r2) / (4.0 * D * D);
            }
        },
        space);
    if (w2 <= 1e-30)
        throw SingularOrbit("degenerate orbit: omega = 0");
    return std::sqrt(w2);
}

double hyperbolic_distance(double xp, double yp, double xq, double yq) {
    if (!(yp > 0) || !(yq > 0))
        throw OutOfDomain("half-plane model requires y > 0");
    if (xp == xq)
        return std::abs(std::log(yq / yp));
    // geodesic circle: center (xi, 0), radius R
    const double xi = (xp * xp + yp * yp - xq * xq - yq * yq) / (2.0 * (xp - xq));
    const double R = std::hypot(xp - xi, yp);
    // x - xi + R cancels catastrophically when x - xi < 0 and the circle is
    // huge (nearly vertical geodesics); y^2 / (R - (x - xi)) is the same
    // quantity computed stably
    auto offset = [R](double t, double y) {
        return t >= 0 ? t + R : y * y / (R - t);
    };
    return std::abs(
        std::log((offset(xp - xi, yp) / offset(xq - xi, yq)) * (yq / yp)));
}

double clairaut_in_distance(const AmbientSpace& space, double d, double theta,
                            int epsilon) {
    if (!(d >= 0))
        throw OutOfDomain("distance must be nonnegative");
    const double ct = std::cos(theta);
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>) {
                return d * ct; // classical relation: d is the orbit radius
            } else if constexpr (std::is_same_v<T, H2xR_G24>) {
                if (epsilon != 1 && epsilon != -1 && epsilon != 0)
                    throw Unsupported("G24 relation needs epsilon in {-1, 0, +1}");
                const double e2d = epsilon == 0 ? 1.0 : std::exp(2.0 * epsilon * d);
                return std::sqrt(s.a * s.a * e2d + s.b * s.b) * ct;
            } else if constexpr (std::is_same_v<T, H2xR_G34>) {
                return std::sqrt(2.0 * std::cosh(d) + s.b * s.b - 1.0) * ct;
            } else if constexpr (std::is_same_v<T, H2xR_G14>) {
                return std::sqrt(sq(std::sinh(d)) + s.b * s.b) * ct;
            } else { // BCV, by the sign of m
                const double l = s.ell;
                if (s.m > 0) {
                    const double sm = std::sqrt(s.m);
                    if (!(d < 0.5 * kPi / sm))
                        throw OutOfDomain("BCV m > 0 requires d < pi/(2 sqrt(m))");
                    const double t = std::tan(sm * d);
                    return std::sin(2.0 * sm * d) * std::sqrt(4.0 * s.m + l * l * t * t) /
                           (4.0 * s.m) * ct;
                }
                if (s.m < 0) {
                    const double sm = std::sqrt(-s.m);
                    const double t = std::tanh(sm * d);
                    return std::sinh(2.0 * sm * d) * std::sqrt(l * l * t * t - 4.0 * s.m) /
                           (-4.0 * s.m) * ct;
                }
                return 0.5 * d * std::sqrt(4.0 + l * l * d * d) * ct;
            }
        },
        space);
}

double radius_from_distance(const BCV& space, double d) {
    if (!(d >= 0))
        throw OutOfDomain("distance must be nonnegative");
    if (space.m > 0) {
        const double sm = std::sqrt(space.m);
        if (!(d < 0.5 * kPi / sm))
            throw OutOfDomain("BCV m > 0 requires d < pi/(2 sqrt(m))");
        return std::tan(sm * d) / sm;
    }
    if (space.m < 0) {
        const double sm = std::sqrt(-space.m);
        return std::tanh(sm * d) / sm;
    }
    return d;
}

double distance_from_radius(const BCV& space, double r) {
    if (!(r >= 0))
        throw OutOfDomain("radius must be nonnegative");
    if (space.m > 0) {
        const double sm = std::sqrt(space.m);
        const double rc = std::min(r, 1e12); // atan saturates anyway
        return std::atan(sm * rc) / sm;
    }
    if (space.m < 0) {
        const double sm = std::sqrt(-space.m);
        if (!(r < 1.0 / sm))
            throw OutOfDomain("BCV m < 0 requires r < 1/sqrt(-m)");
        return std::atanh(sm * r) / sm;
    }
    return r;
}

namespace {

// Rotation flow of X = y d/dx - x d/dy (clockwise), used by the Euclidean
// and BCV orbits. The BCV metric is invariant under it.
AmbientPoint rotate_orbit(const AmbientPoint& p0, double v) {
    const double c = std::cos(v), s = std::sin(v);
    return {p0.x * c + p0.y * s, -p0.x * s + p0.y * c, p0.z};
}

// G14 orbits are computed by integrating the flow of X1 + b*X4.
AmbientPoint g14_orbit_point(const H2xR_G14& g, const AmbientPoint& p0, double v) {
    if (v == 0)
        return p0;
    using Ode = Rk45<2>;
    Ode::Options opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-13;
    opt.max_step = 0.05;
    auto rhs = [](double, const Ode::State& y, Ode::State& dy) {
        dy[0] = 0.5 * (y[0] * y[0] - y[1] * y[1] + 1.0);
        dy[1] = y[0] * y[1];
    };
    auto res = Ode::integrate(rhs, 0.0, {p0.x, p0.y}, v, opt);
    return {res.y[0], res.y[1], g.b * v + p0.z};
}

} // namespace

OrbitDescriptor orbit_descriptor(const AmbientSpace& space, const AmbientPoint& p) {
    require_in_domain(space, p);
    OrbitDescriptor orb;
    orb.space = space;
    orb.through = p;
    orb.omega = omega_at(space, p);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>) {
                orb.curve = [p](double v) { return rotate_orbit(p, v); };
                orb.geometric_distance = std::hypot(p.x, p.y);
            } else if constexpr (std::is_same_v<T, H2xR_G24>) {
                orb.curve = [p, s](double v) {
                    return AmbientPoint{s.a * v + p.x, p.y, s.b * v + p.z};
                };
                orb.geometric_distance = std::abs(std::log(p.y));
            } else if constexpr (std::is_same_v<T, H2xR_G34>) {
                orb.curve = [p, s](double v) {
                    const double e = std::exp(v);
                    return AmbientPoint{e * p.x, e * p.y, s.b * v + p.z};
                };
                const double tan_a = p.y / p.x; // may be +-inf on the axis x = 0
                if (std::isfinite(tan_a)) {
                    const double q = std::sqrt(1.0 + 4.0 * tan_a * tan_a);
                    orb.geometric_distance = std::log((q + 1.0) / (q - 1.0));
                } else {
                    orb.geometric_distance = 0.0;
                }
            } else if constexpr (std::is_same_v<T, H2xR_G14>) {
                orb.curve = [p, s](double v) { return g14_orbit_point(s, p, v); };
                const double beta = (1.0 + p.x * p.x + p.y * p.y) / p.y;
                orb.geometric_distance =
                    std::log(0.5 * (beta + std::sqrt(beta * beta - 4.0)));
            } else { // BCV
                orb.curve = [p](double v) { return rotate_orbit(p, v); };
                orb.geometric_distance = distance_from_radius(s, std::hypot(p.x, p.y));
            }
        },
        space);
    return orb;
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

HorizontalProfile g34_profile(double b) {
    const double b2 = b * b;
    return HorizontalProfile(
        Interval::all(),
        ScalarProfile::sqrt_of(
            [b2](double u) { return sq(std::cosh(u)) + b2; },
            [](double u) { return std::sinh(2.0 * u); },
            [](double u) { return 2.0 * std::cosh(2.0 * u); }));
}

HorizontalProfile funnel_profile() { return g34_profile(1.0); }

AmbientPoint funnel_embedding(double u, double v) {
    const double ev = std::exp(v);
    return {-ev * std::tanh(u), ev / std::cosh(u), v};
}

HorizontalProfile catenoid_profile() {
    return HorizontalProfile(
        Interval::all(),
        ScalarProfile::sqrt_of([](double u) { return 1.0 + u * u; },
                               [](double u) { return 2.0 * u; },
                               [](double) { return 2.0; }));
}

HorizontalProfile g24_profile(double a, double b) {
    if (a == 0 && b == 0)
        throw Error("G24 requires (a, b) != (0, 0)");
    const double a2 = a * a, b2 = b * b;
    return HorizontalProfile(
        Interval::all(),
        ScalarProfile::sqrt_of(
            [a2, b2](double u) { return a2 * std::exp(-2.0 * u) + b2; },
            [a2](double u) { return -2.0 * a2 * std::exp(-2.0 * u); },
            [a2](double u) { return 4.0 * a2 * std::exp(-2.0 * u); }));
}

MetricProfile g24_slanted_profile(double a, double b) {
    if (a == 0)
        throw Error("slanted G24 lift needs a != 0");
    const double k2 = (b / a) * (b / a);
    auto W = [a, b](double u) { return a * a * std::exp(-2.0 * u) + b * b; };
    auto dW = [a](double u) { return -2.0 * a * a * std::exp(-2.0 * u); };
    auto d2W = [a](double u) { return 4.0 * a * a * std::exp(-2.0 * u); };

    // lift gamma(u) = (sin u, e^u, (b/a) sin u): E and F pick up the slant
    // while E*omega^2 - F^2 = omega^2 still holds.
    auto E = ScalarProfile::analytic(
        [k2](double u) { return 1.0 + sq(std::cos(u)) * (std::exp(-2.0 * u) + k2); },
        [k2](double u) {
            const double e = std::exp(-2.0 * u);
            return -std::sin(2.0 * u) * (e + k2) - 2.0 * sq(std::cos(u)) * e;
        },
        [k2](double u) {
            const double e = std::exp(-2.0 * u);
            return -2.0 * std::cos(2.0 * u) * (e + k2) + 4.0 * e * std::sin(2.0 * u) +
                   4.0 * sq(std::cos(u)) * e;
        });
    auto F = ScalarProfile::analytic(
        [a, W](double u) { return std::cos(u) / a * W(u); },
        [a, W, dW](double u) {
            return (-std::sin(u) * W(u) + std::cos(u) * dW(u)) / a;
        },
        [a, W, dW, d2W](double u) {
            return (-std::cos(u) * W(u) - 2.0 * std::sin(u) * dW(u) +
                    std::cos(u) * d2W(u)) / a;
        });
    // bounded domain: far down the sheet E*omega^2 grows like e^{4|u|} and
    // the identity E*omega^2 - F^2 = omega^2 drowns in cancellation
    return MetricProfile(Interval(-3.5, 3.5), E, F, ScalarProfile::sqrt_of(W, dW, d2W));
}

HorizontalProfile g14_profile(double b) {
    if (b == 0)
        throw Error("G14 profile through the axis needs b != 0");
    const double b2 = b * b;
    return HorizontalProfile(
        Interval::all(),
        ScalarProfile::sqrt_of(
            [b2](double u) { return sq(std::sinh(u)) + b2; },
            [](double u) { return std::sinh(2.0 * u); },
            [](double u) { return 2.0 * std::cosh(2.0 * u); }));
}

HorizontalProfile bcv_profile(double ell, double m) {
    const double u_hi = m > 0 ? 0.5 * kPi / std::sqrt(m) : Interval::all().hi;
    const Interval dom(0.0, u_hi);
    const double l2 = ell * ell;
    // unguarded radius: integrator trial stages may probe slightly past the
    // domain, where the value only has to stay finite
    auto radius = [m](double u) {
        if (m > 0)
            return std::tan(std::sqrt(m) * u) / std::sqrt(m);
        if (m < 0)
            return std::tanh(std::sqrt(-m) * u) / std::sqrt(-m);
        return u;
    };
    auto eval = [radius, l2, m](double u) {
        const double r = radius(u);
        const double D = 1.0 + m * r * r;
        return r * std::sqrt(4.0 + l2 * r * r) / (2.0 * D);
    };
    // omega_u = P/(D S), omega_uu = (P' D S^2 - r P (2 m S^2 + l^2 D))/(D S^3)
    // with P = 2 + (l^2 - 2m) r^2, S = sqrt(4 + l^2 r^2), D = 1 + m r^2,
    // using dr/du = D.
    auto deriv = [radius, l2, m](double u) {
        const double r = radius(u);
        const double D = 1.0 + m * r * r;
        const double S = std::sqrt(4.0 + l2 * r * r);
        return (2.0 + (l2 - 2.0 * m) * r * r) / (D * S);
    };
    auto deriv2 = [radius, l2, m](double u) {
        const double r = radius(u);
        const double D = 1.0 + m * r * r;
        const double S2 = 4.0 + l2 * r * r;
        const double S = std::sqrt(S2);
        const double P = 2.0 + (l2 - 2.0 * m) * r * r;
        const double dP = 2.0 * (l2 - 2.0 * m) * r;
        return (dP * D * S2 - r * P * (2.0 * m * S2 + l2 * D)) / (D * S2 * S);
    };
    return HorizontalProfile(dom, ScalarProfile::analytic(eval, deriv, deriv2));
}

std::function<AmbientPoint(double)>
horizontal_lift_g34(const std::function<std::array<double, 2>(double)>& profile_curve,
                    double b, const AmbientPoint& init, Interval s_range) {
    if (!in_h2(init))
        throw OutOfDomain("lift initial point must satisfy y > 0");
    const double s0 = s_range.lo;
    const auto xi0 = profile_curve(s0);
    const double theta0 = std::atan2(init.y, init.x);
    const double r0 = std::hypot(init.x, init.y);
    const double c1 = theta0 - xi0[0];
    const double c2 = init.z - b * std::log(r0) - xi0[1];

    auto xi2_dot = [&profile_curve](double s) {
        const double h = 1e-6;
        return (profile_curve(s + h)[1] - profile_curve(s - h)[1]) / (2.0 * h);
    };
    auto check_xi1 = [&profile_curve, c1](double s) {
        const double xi1 = profile_curve(s)[0];
        if (!(xi1 > 0.0 && xi1 < kPi))
            throw OutOfDomain("xi1 left (0, pi) at s = " + std::to_string(s));
        // the anchored polar angle must stay in the half plane too
        if (!(xi1 + c1 > 0.0 && xi1 + c1 < kPi))
            throw OutOfDomain("lift angle xi1 + c1 left (0, pi) at s = " +
                              std::to_string(s));
        return xi1;
    };
    check_xi1(s0);

    // log r solves (log r)' = -b sin^2(theta) xi2' / (b^2 sin^2(theta) + 1).
    using Ode = Rk45<1>;
    auto rhs = [&, b, c1](double s, const Ode::State& y, Ode::State& dy) {
        (void)y;
        const double sin_t = std::sin(check_xi1(s) + c1);
        dy[0] = -b * sin_t * sin_t * xi2_dot(s) / (b * b * sin_t * sin_t + 1.0);
    };

    struct Node {
        double s, logr, dlogr;
    };
    auto nodes = std::make_shared<std::vector<Node>>();
    {
        Ode::Options opt;
        opt.abs_tol = 1e-12;
        opt.rel_tol = 1e-12;
        // the curve is later resampled through cubic Hermite interpolation;
        // a small step keeps the interpolant's derivative error ~1e-9
        opt.max_step = 0.01;
        Ode::State d0;
        rhs(s0, {std::log(r0)}, d0);
        nodes->push_back({s0, std::log(r0), d0[0]});
        Ode::integrate(rhs, s0, {std::log(r0)}, s_range.hi, opt,
                       [&](double, const Ode::State&, double s, const Ode::State& y) {
                           Ode::State d;
                           rhs(s, y, d);
                           nodes->push_back({s, y[0], d[0]});
                           return true;
                       });
    }

    auto log_r = [nodes](double s) {
        const auto& ns = *nodes;
        if (s <= ns.front().s)
            return ns.front().logr + (s - ns.front().s) * ns.front().dlogr;
        if (s >= ns.back().s)
            return ns.back().logr + (s - ns.back().s) * ns.back().dlogr;
        std::size_t lo = 0, hi = ns.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (ns[mid].s <= s ? lo : hi) = mid;
        }
        // cubic Hermite on [lo, hi]
        const double h = ns[hi].s - ns[lo].s;
        const double t = (s - ns[lo].s) / h;
        const double h00 = (1 + 2 * t) * sq(1 - t), h10 = t * sq(1 - t);
        const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
        return h00 * ns[lo].logr + h10 * h * ns[lo].dlogr + h01 * ns[hi].logr +
               h11 * h * ns[hi].dlogr;
    };

    auto curve = [profile_curve, b, c1, c2, log_r](double s) {
        const auto xi = profile_curve(s);
        const double theta = xi[0] + c1;
        const double r = std::exp(log_r(s));
        return AmbientPoint{r * std::cos(theta), r * std::sin(theta),
                            b * std::log(r) + xi[1] + c2};
    };
    return curve;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"funnel", H2xR_G34{1.0}, funnel_profile(), Interval(-1.5, 1.5)});
        v.push_back({"catenoid", EuclideanRotational{}, catenoid_profile(),
                     Interval(-2.0, 2.0)});
        v.push_back({"g24-sheet", H2xR_G24{1.0, 1.0}, g24_profile(1.0, 1.0),
                     Interval(-2.0, 2.0)});
        v.push_back({"g24-slanted", H2xR_G24{1.0, 1.0}, g24_slanted_profile(1.0, 1.0),
                     Interval(-2.0, 2.0)});
        v.push_back({"g14-rotational", H2xR_G14{1.0}, g14_profile(1.0),
                     Interval(-1.5, 1.5)});
        v.push_back({"bcv-flat", BCV{0.0, 0.0}, bcv_profile(0.0, 0.0),
                     Interval(0.3, 3.0)});
        v.push_back({"bcv-berger", BCV{1.0, 1.0}, bcv_profile(1.0, 1.0),
                     Interval(0.2, 1.2)});
        v.push_back({"bcv-hyperbolic", BCV{0.0, -0.25}, bcv_profile(0.0, -0.25),
                     Interval(0.3, 3.0)});
        v.push_back({"bcv-mixed", BCV{1.0, -1.0}, bcv_profile(1.0, -1.0),
                     Interval(0.3, 2.0)});
        return v;
    }();
    return entries;
}

const CatalogEntry* catalog_lookup(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

MetricProfile profile_for_space(const AmbientSpace& space) {
    return std::visit(
        [](const auto& s) -> MetricProfile {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>)
                return catenoid_profile();
            else if constexpr (std::is_same_v<T, H2xR_G24>)
                return g24_profile(s.a, s.b);
            else if constexpr (std::is_same_v<T, H2xR_G34>)
                return g34_profile(s.b);
            else if constexpr (std::is_same_v<T, H2xR_G14>)
                return g14_profile(s.b != 0 ? s.b : 1.0);
            else
                return bcv_profile(s.ell, s.m);
        },
        space);
}

namespace {

std::vector<double> parse_params(const std::string& text, std::size_t expected,
                                 const std::string& tag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    if (out.size() != expected)
        throw Error("space tag '" + tag + "' expects " + std::to_string(expected) +
                    " parameter(s)");
    return out;
}

} // namespace

AmbientSpace parse_space_tag(const std::string& tag) {
    const auto colon = tag.find(':');
    const std::string head = tag.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : tag.substr(colon + 1);
    if (head == "r3-rot")
        return EuclideanRotational{};
    if (head == "h2r-g24") {
        auto p = parse_params(rest, 2, tag);
        if (p[0] == 0 && p[1] == 0)
            throw Error("h2r-g24 requires (a, b) != (0, 0)");
        return H2xR_G24{p[0], p[1]};
    }
    if (head == "h2r-g34")
        return H2xR_G34{parse_params(rest, 1, tag)[0]};
    if (head == "h2r-g14")
        return H2xR_G14{parse_params(rest, 1, tag)[0]};
    if (head == "bcv") {
        auto p = parse_params(rest, 2, tag);
        return BCV{p[0], p[1]};
    }
    throw Error("unknown space tag '" + tag + "'");
}

std::string space_tag(const AmbientSpace& space) {
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    return std::visit(
        [&](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>)
                return "r3-rot";
            else if constexpr (std::is_same_v<T, H2xR_G24>)
                return "h2r-g24:" + fmt(s.a) + "," + fmt(s.b);
            else if constexpr (std::is_same_v<T, H2xR_G34>)
                return "h2r-g34:" + fmt(s.b);
            else if constexpr (std::is_same_v<T, H2xR_G14>)
                return "h2r-g14:" + fmt(s.b);
            else
                return "bcv:" + fmt(s.ell) + "," + fmt(s.m);
        },
        space);
}

} // namespace invgeo
