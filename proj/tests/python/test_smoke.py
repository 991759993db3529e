import math

import pytest

import invgeo


def test_funnel_profile_basics():
    p = invgeo.funnel_profile()
    assert p.omega(0.0) == pytest.approx(math.sqrt(2.0))
    assert p.E(0.3) == 1.0
    assert p.F(0.3) == 0.0
    rep = invgeo.validate_metric_identity(p, 100, 1e-12)
    assert rep.pass_
    assert rep.max_residual == 0.0


def test_gauss_curvature_values():
    assert invgeo.gauss_curvature(invgeo.funnel_profile(), 0.0) == pytest.approx(-0.5)
    cos_profile = invgeo.solve_omega(1.0, 1.0, 0.0).profile()
    assert invgeo.gauss_curvature(cos_profile, 0.3) == pytest.approx(1.0)


def test_orbit_geodesic_stays_on_the_neck():
    p = invgeo.funnel_profile()
    init = invgeo.state_from_slant(p, 0.0, 0.0, math.sqrt(2.0))
    path = invgeo.integrate_geodesic(p, init, 10.0)
    assert path.completed
    assert max(abs(st.u) for st in path.states) <= 1e-8
    assert invgeo.is_orbit_geodesic(p, 0.0, 1e-9)
    assert not invgeo.is_orbit_geodesic(p, 0.5, 1e-6)


def test_clairaut_drift_is_tiny():
    p = invgeo.catalog_profile("g24-slanted")
    init = invgeo.state_from_angle(p, 0.4, 0.0, 1.1)
    path = invgeo.integrate_geodesic(p, init, 10.0)
    assert path.max_slant_drift <= 1e-8
    assert path.max_speed_drift <= 1e-8


def test_quadrature_matches_integration():
    p = invgeo.funnel_profile()
    q = invgeo.geodesic_by_quadrature(p, 1.0, 0.0, 0.0, 2.0, 1, 1e-10, 9)
    init = invgeo.state_from_slant(p, 0.0, 0.0, 1.0)
    path = invgeo.integrate_geodesic(p, init, 10.0, max_step=0.01)
    # compare v at the final grid point against the nearest path state
    u_end = q.u_grid[-1]
    nearest = min(path.states, key=lambda st: abs(st.u - u_end))
    assert abs(nearest.u - u_end) < 1e-2
    assert q.v_values[-1] == pytest.approx(nearest.v, abs=1e-2)


def test_hyperbolic_distance_and_clairaut_relation():
    assert invgeo.hyperbolic_distance(0, 1, 0, math.e) == pytest.approx(1.0)
    assert invgeo.hyperbolic_distance(-1, 1, 1, 1) == pytest.approx(math.acosh(3.0))
    for d in (0.2, 0.9, 1.7):
        assert invgeo.clairaut_in_distance("bcv:0,-0.25", d, 0.4) == pytest.approx(
            math.sinh(d) * math.cos(0.4), abs=1e-12
        )


def test_bcv_radius_distance_roundtrip():
    r = invgeo.radius_from_distance(1.0, 1.0, 0.6)
    assert invgeo.distance_from_radius(1.0, 1.0, r) == pytest.approx(0.6)


def test_python_callable_profile():
    p = invgeo.make_profile(lambda u: math.sqrt(1.0 + u * u), -3.0, 3.0)
    assert p.omega(1.0) == pytest.approx(math.sqrt(2.0))
    init = invgeo.state_from_slant(p, 0.5, 0.0, 0.3)
    path = invgeo.integrate_geodesic(p, init, 2.0)
    assert path.max_slant_drift < 1e-8


def test_closed_form_crosscheck():
    fam = invgeo.ClosedFormFamily.negative(1.0, 1.0, 0.5)
    sol = invgeo.solve_omega(-1.0, 1.0, 0.0)
    rep = invgeo.crosscheck_closed_form(fam, sol, -1.0, 1.0, 0.5, 1e-6)
    assert rep.pass_


def test_errors_surface_as_exceptions():
    p = invgeo.funnel_profile()
    with pytest.raises(invgeo.InvgeoError):
        invgeo.geodesic_by_quadrature(p, 1.5, -1.0, 0.0, 1.0)
    with pytest.raises(invgeo.InvgeoError):
        invgeo.omega_at("h2r-g14:0", (0.0, 1.0, 0.0))
