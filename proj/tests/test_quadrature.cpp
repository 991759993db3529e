#include <cmath>

#include <doctest.h>

#include "invgeo/closed_forms.hpp"
#include "invgeo/geodesic.hpp"
#include "invgeo/quadrature.hpp"
#include "invgeo/spaces.hpp"

using namespace invgeo;

namespace {

// v(u) from the integrated geodesic, Hermite-interpolated in u.
double ode_v_at(const MetricProfile& p, double c, double u0, double u) {
    IntegrationControl ctrl;
    ctrl.max_step = 0.02;
    const auto start = state_from_slant(p, u0, 0.0, c, u > u0 ? +1 : -1);
    const auto path = integrate_until_u(p, start, u, 1e4, ctrl);
    const bool up = u > u0;
    for (std::size_t i = 0; i + 1 < path.states.size(); ++i) {
        const auto& a = path.states[i];
        const auto& b = path.states[i + 1];
        const bool brackets = up ? (a.u <= u && u <= b.u) : (b.u <= u && u <= a.u);
        if (!brackets)
            continue;
        const double h = b.u - a.u;
        const double t = (u - a.u) / h;
        const double m0 = a.dv / a.du, m1 = b.dv / b.du;
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
        return h00 * a.v + h10 * h * m0 + h01 * b.v + h11 * h * m1;
    }
    return path.states.back().v;
}

} // namespace

TEST_CASE("zero slant gives v controlled by -F/omega^2 alone") {
    const auto funnel = funnel_profile();
    const auto q = geodesic_by_quadrature(funnel, 0.0, -1.0, 0.25, 1.5, +1, 1e-12, 17);
    for (double v : q.v_values)
        CHECK(v == doctest::Approx(0.25)); // F == 0 -> v constant

    const auto slanted = g24_slanted_profile(1.0, 1.0);
    const auto qs = geodesic_by_quadrature(slanted, 0.0, 0.0, 0.0, 1.0, +1, 1e-12, 9);
    // oracle: direct integral of -F/omega^2 with the known closed forms
    const auto direct = integrate(
        [&](double u) {
            const double w = slanted.omega()(u);
            return -slanted.F()(u) / (w * w);
        },
        0.0, 1.0, 1e-13);
    CHECK(qs.v_values.back() == doctest::Approx(direct.value).epsilon(1e-10));
}

TEST_CASE("funnel slant-1 quadrature matches the explicit integrand") {
    // v(u) = int_0^u dt / (sqrt(sinh^2 t + 2) sqrt(1 + sinh^2 t))
    const auto funnel = funnel_profile();
    const auto q = geodesic_by_quadrature(funnel, 1.0, 0.0, 0.0, 2.0, +1, 1e-12, 5);
    auto integrand = [](double t) {
        const double s2 = std::sinh(t) * std::sinh(t);
        return 1.0 / (std::sqrt(s2 + 2.0) * std::sqrt(1.0 + s2));
    };
    for (std::size_t i = 0; i < q.u_grid.size(); ++i) {
        const auto oracle = integrate(integrand, 0.0, q.u_grid[i], 1e-13);
        CHECK(q.v_values[i] == doctest::Approx(oracle.value).epsilon(1e-10));
    }
}

TEST_CASE("quadrature agrees with the integrated geodesic") {
    struct Case {
        const char* name;
        double c, u0, u1;
    };
    const auto funnel = funnel_profile();
    const auto q = geodesic_by_quadrature(funnel, 1.0, 0.0, 0.0, 2.0, +1, 1e-10, 21);
    for (std::size_t i = 1; i < q.u_grid.size(); ++i)
        CHECK(q.v_values[i] ==
              doctest::Approx(ode_v_at(funnel, 1.0, 0.0, q.u_grid[i])).epsilon(1e-6));
}

TEST_CASE("quadrature/ODE equivalence across several profiles and slants") {
    struct Case {
        MetricProfile profile;
        double c, u0, u1;
    };
    const std::vector<Case> cases = {
        {funnel_profile(), 0.7, -0.5, 1.5},
        {funnel_profile(), 1.3, 0.1, 1.8},
        {catenoid_profile(), 0.6, 0.0, 2.0},
        {g24_slanted_profile(1.0, 1.0), 0.5, -1.0, 1.0},
        {g14_profile(1.0), 0.9, 0.2, 1.7},
        {bcv_profile(1.0, -0.5), 0.4, 0.5, 1.6},
    };
    for (const auto& cs : cases) {
        const auto q =
            geodesic_by_quadrature(cs.profile, cs.c, cs.u0, 0.0, cs.u1, +1, 1e-10, 9);
        for (std::size_t i = 1; i < q.u_grid.size(); ++i)
            CHECK(q.v_values[i] ==
                  doctest::Approx(ode_v_at(cs.profile, cs.c, cs.u0, q.u_grid[i]))
                      .epsilon(1e-6));
    }
}

TEST_CASE("downhill segments integrate with the negative branch") {
    const auto funnel = funnel_profile();
    const auto q = geodesic_by_quadrature(funnel, 0.8, 1.5, 0.0, 0.2, -1, 1e-10, 11);
    CHECK(q.u_grid.front() == 1.5);
    CHECK(q.u_grid.back() == doctest::Approx(0.2));
    for (std::size_t i = 1; i < q.u_grid.size(); ++i)
        CHECK(q.v_values[i] ==
              doctest::Approx(ode_v_at(funnel, 0.8, 1.5, q.u_grid[i])).epsilon(1e-6));
}

TEST_CASE("slant region violation is detected") {
    const auto funnel = funnel_profile();
    // omega dips to sqrt(2) < 1.5 inside the segment
    CHECK_THROWS_AS(geodesic_by_quadrature(funnel, 1.5, -1.0, 0.0, 1.0, +1, 1e-10),
                    SlantRegionViolation);
    CHECK_THROWS_AS(geodesic_by_quadrature(funnel, 1.0, 0.0, 0.0, 0.0, +1, 1e-10), Error);
}

TEST_CASE("turning-point endpoint is integrable") {
    const auto funnel = funnel_profile();
    const double c = 1.5;
    const double u_star = std::asinh(std::sqrt(c * c - 2.0)); // omega(u*) = c
    const auto q = geodesic_by_quadrature(funnel, c, 1.2, 0.0, u_star, -1, 1e-9, 33);
    CHECK(std::isfinite(q.v_values.back()));
    CHECK(q.estimated_error < 1e-6);

    // oracle: the ODE runs through the turning point; v at the turning
    // arclength equals the quadrature's endpoint value
    const auto init = state_from_slant(funnel, 1.2, 0.0, c, -1);
    const auto path = integrate_geodesic(funnel, init, 8.0);
    REQUIRE(path.diagnostics.turning_points.size() >= 1);
    const double s0 = path.diagnostics.turning_points.front();
    const auto at_turn = integrate_geodesic(funnel, init, s0).states.back();
    CHECK(at_turn.u == doctest::Approx(u_star).epsilon(1e-6));
    CHECK(q.v_values.back() == doctest::Approx(at_turn.v).epsilon(1e-6));
}

TEST_CASE("quadrature grid endpoints and metadata") {
    const auto funnel = funnel_profile();
    const auto q = geodesic_by_quadrature(funnel, 0.5, -0.3, 0.7, 1.1, +1, 1e-10, 33);
    CHECK(q.u_grid.size() == 33);
    CHECK(q.v_values.front() == 0.7);
    CHECK(q.branch_sign == 1);
    for (std::size_t i = 1; i < q.u_grid.size(); ++i)
        CHECK(q.u_grid[i] > q.u_grid[i - 1]);
}
