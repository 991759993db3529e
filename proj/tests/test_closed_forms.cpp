#include <cmath>
#include <numbers>

#include <doctest.h>

#include "invgeo/closed_forms.hpp"
#include "invgeo/geodesic.hpp"

using namespace invgeo;

TEST_CASE("solve_omega fundamental solutions") {
    const auto cosu = solve_omega(1.0, 1.0, 0.0);
    CHECK(cosu.omega(0.7) == doctest::Approx(std::cos(0.7)));
    CHECK(cosu.domain.lo == doctest::Approx(-std::numbers::pi / 2));
    CHECK(cosu.domain.hi == doctest::Approx(std::numbers::pi / 2));

    const auto coshu = solve_omega(-1.0, 1.0, 0.0);
    CHECK(coshu.omega(-1.3) == doctest::Approx(std::cosh(1.3)));
    CHECK(!coshu.domain.bounded());

    const auto lin = solve_omega(0.0, 1.0, 1.0);
    CHECK(lin.omega(2.0) == doctest::Approx(3.0));
    CHECK(lin.domain.lo == doctest::Approx(-1.0));

    CHECK_THROWS_AS(solve_omega(1.0, -1.0, 0.0), Error);
}

TEST_CASE("solve_omega satisfies the curvature equation") {
    const auto sol = solve_omega(0.25, 2.0, 1.0);
    for (double u = -1.5; u <= 1.5; u += 0.25) {
        CHECK(sol.omega(u) ==
              doctest::Approx(2 * std::cos(u / 2) + 2 * std::sin(u / 2)).epsilon(1e-12));
        CHECK(std::abs(sol.omega_uu(u) + 0.25 * sol.omega(u)) < 1e-12);
    }
}

TEST_CASE("solve_omega clips the domain to omega > 0") {
    const auto expish = solve_omega(-1.0, 1.0, 2.0); // cosh + 2 sinh, zero at u0 < 0
    const double u0 = std::atanh(-0.5);
    CHECK(expish.domain.lo == doctest::Approx(u0));
    CHECK(expish.omega(u0 + 1e-9) > 0.0);

    const auto down = solve_omega(0.0, 2.0, -1.0); // 2 - u, positive left of 2
    CHECK(down.domain.hi == doctest::Approx(2.0));
}

TEST_CASE("first integral values") {
    CHECK(first_integral_a(CurvatureCase::Positive, 1.0, std::cos(0.3),
                           -std::sin(0.3)) == doctest::Approx(1.0));
    CHECK(first_integral_a(CurvatureCase::Negative, 1.0, std::cosh(0.6),
                           std::sinh(0.6)) == doctest::Approx(1.0));
    CHECK(first_integral_a(CurvatureCase::Negative, 1.0, std::exp(0.4),
                           std::exp(0.4)) == doctest::Approx(0.0));
    CHECK(first_integral_a(CurvatureCase::Flat, 1.0, 5.0, 0.7) == 0.7);
}

TEST_CASE("first integral is constant along solutions") {
    struct Case {
        double K, w0, dw0;
        CurvatureCase cc;
        double R;
    };
    const Case cases[] = {{1.0, 1.2, 0.3, CurvatureCase::Positive, 1.0},
                          {0.25, 2.0, -0.5, CurvatureCase::Positive, 2.0},
                          {-1.0, 1.0, 2.0, CurvatureCase::Negative, 1.0},
                          {-4.0, 0.7, 0.1, CurvatureCase::Negative, 0.5},
                          {0.0, 1.0, 0.8, CurvatureCase::Flat, 1.0}};
    for (const auto& cs : cases) {
        const auto sol = solve_omega(cs.K, cs.w0, cs.dw0);
        const double a0 = first_integral_a(cs.cc, cs.R, sol.omega(0), sol.omega_u(0));
        const Interval w = sol.domain.sampling_window(2.0);
        for (int i = 0; i < 100; ++i) {
            const double u = w.lo + w.width() * (i + 0.5) / 100;
            const double a = first_integral_a(cs.cc, cs.R, sol.omega(u), sol.omega_u(u));
            CHECK(std::abs(a - a0) <= 1e-10 * std::max(1.0, std::abs(a0)));
        }
    }
}

TEST_CASE("closed-form values at anchor points") {
    // positive curvature at the omega maximum: arcsin(0) = 0
    const auto cosu = solve_omega(1.0, 1.0, 0.0);
    const auto pos = ClosedFormFamily::positive(1.0, 1.0, 0.5, 0.0);
    CHECK(closed_form_v(pos, cosu, 0.0) == doctest::Approx(0.0));

    // negative curvature, a = c^2 = 1: v = ln|tanh u|
    const auto coshu = solve_omega(-1.0, 1.0, 0.0);
    const auto crit = ClosedFormFamily::negative(1.0, 1.0, 1.0, 0.0);
    for (double u : {0.4, 1.0, 2.2})
        CHECK(closed_form_v(crit, coshu, u) ==
              doctest::Approx(std::log(std::tanh(u))).epsilon(1e-12));

    // flat with constant omega = 2, c = 1: v = u / (2 sqrt(3))
    const auto flat2 = solve_omega(0.0, 2.0, 0.0);
    const auto fl = ClosedFormFamily::flat(0.0, 1.0, 0.0);
    for (double u : {-1.0, 0.5, 3.0})
        CHECK(closed_form_v(fl, flat2, u) ==
              doctest::Approx(u / (2 * std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("positive-curvature family rejects a <= c^2") {
    CHECK_THROWS_AS(ClosedFormFamily::positive(1.0, 0.25, 0.5), Error);
    CHECK_THROWS_AS(ClosedFormFamily::positive(1.0, -1.0, 0.5), Error);
    CHECK_THROWS_AS(ClosedFormFamily::positive(1.0, 1.0, 0.0), Error);
    CHECK_NOTHROW(ClosedFormFamily::positive(1.0, 1.0, 0.5));
}

TEST_CASE("branch domain errors") {
    const auto cosu = solve_omega(1.0, 1.0, 0.0);
    const auto pos = ClosedFormFamily::positive(1.0, 1.0, 0.9, 0.0);
    // near the domain edge tan u explodes and the arcsin argument leaves [-1,1]
    CHECK_THROWS_AS(closed_form_v(pos, cosu, 1.5), BranchDomainError);

    const auto coshu = solve_omega(-1.0, 1.0, 0.0);
    const auto crit = ClosedFormFamily::negative(1.0, 1.0, 1.0, 0.0);
    CHECK_THROWS_AS(closed_form_v(crit, coshu, 0.0), BranchDomainError); // omega' = 0

    const auto flat = ClosedFormFamily::flat(1.0, 2.0, 0.0);
    const auto lin = solve_omega(0.0, 1.0, 1.0);
    CHECK_THROWS_AS(closed_form_v(flat, lin, 0.5), BranchDomainError); // omega < c
}

namespace {

struct BranchCase {
    const char* name;
    ClosedFormFamily fam;
    OmegaSolution sol;
    Interval range;
};

std::vector<BranchCase> branch_cases() {
    std::vector<BranchCase> cases;
    cases.push_back({"positive", ClosedFormFamily::positive(1.0, 1.0, 0.3),
                     solve_omega(1.0, 1.0, 0.0), Interval(-1.0, 1.0)});
    cases.push_back({"negative a>c^2", ClosedFormFamily::negative(1.0, 1.0, 0.5),
                     solve_omega(-1.0, 1.0, 0.0), Interval(-1.0, 1.0)});
    cases.push_back({"negative a=c^2", ClosedFormFamily::negative(1.0, 1.0, 1.0),
                     solve_omega(-1.0, 1.0, 0.0), Interval(0.5, 1.5)});
    cases.push_back({"negative 0<a<c^2", ClosedFormFamily::negative(1.0, 1.0, 2.0),
                     solve_omega(-1.0, 1.0, 0.0), Interval(1.4, 2.2)});
    cases.push_back({"negative a<0", ClosedFormFamily::negative(1.0, -3.0, 1.0),
                     solve_omega(-1.0, 1.0, 2.0), Interval(0.3, 1.3)});
    cases.push_back({"negative a=0", ClosedFormFamily::negative(1.0, 0.0, 1.0),
                     solve_omega(-1.0, 1.0, 1.0), Interval(0.2, 1.2)});
    cases.push_back({"flat a!=0", ClosedFormFamily::flat(1.0, 0.8),
                     solve_omega(0.0, 1.0, 1.0), Interval(0.0, 3.0)});
    cases.push_back({"flat a=0", ClosedFormFamily::flat(0.0, 1.0),
                     solve_omega(0.0, 2.0, 0.0), Interval(-1.0, 2.0)});
    return cases;
}

} // namespace

TEST_CASE("family constants match the solutions' first integrals") {
    for (const auto& cs : branch_cases()) {
        const double mid = 0.5 * (cs.range.lo + cs.range.hi);
        const double a = first_integral_a(cs.fam.curvature_case, cs.fam.R,
                                          cs.sol.omega(mid), cs.sol.omega_u(mid));
        CHECK(a == doctest::Approx(cs.fam.a).epsilon(1e-10));
    }
}

TEST_CASE("derivative of every branch matches the geodesic integrand") {
    for (const auto& cs : branch_cases()) {
        INFO(cs.name);
        const double h = 1e-5;
        for (int i = 1; i < 8; ++i) {
            const double u = cs.range.lo + cs.range.width() * i / 8.0;
            const double dv = (closed_form_v(cs.fam, cs.sol, u + h) -
                               closed_form_v(cs.fam, cs.sol, u - h)) /
                              (2 * h);
            const double w = cs.sol.omega(u);
            const double integrand =
                cs.fam.c / (w * std::sqrt(w * w - cs.fam.c * cs.fam.c));
            CHECK(std::abs(dv) == doctest::Approx(std::abs(integrand)).epsilon(1e-6));
        }
    }
}

TEST_CASE("every branch cross-checks against quadrature and the integrator") {
    for (const auto& cs : branch_cases()) {
        INFO(cs.name);
        const auto rep =
            crosscheck_closed_form(cs.fam, cs.sol, cs.range, cs.fam.c, 1e-7);
        CHECK(rep.pass);
    }
}
