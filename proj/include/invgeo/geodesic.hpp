#pragma once

#include <vector>

#include "invgeo/profile.hpp"

namespace invgeo {

/// Phase-space point of an arclength-parametrized curve on a profile.
struct GeodesicState {
    double s = 0.0;
    double u = 0.0;
    double v = 0.0;
    double du = 0.0; // u'
    double dv = 0.0; // v'
};

/// The conserved quantity omega * cos(theta) of Clairaut's relation.
struct Slant {
    double c = 0.0;
};

enum class PathStatus { Completed, DomainExit };

struct PathDiagnostics {
    double max_speed_drift = 0.0;            // |E u'^2 + 2F u'v' + w^2 v'^2 - 1|
    double max_slant_drift = 0.0;            // |F u' + w^2 v' - c|
    std::vector<double> turning_points;      // arclengths where u' changes sign
};

struct GeodesicPath {
    std::vector<GeodesicState> states;
    Slant slant;
    PathDiagnostics diagnostics;
    PathStatus status = PathStatus::Completed;
};

struct IntegrationControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.1;
};

/// Slant c = F u' + omega^2 v' of a state.
Slant clairaut_slant(const MetricProfile& p, const GeodesicState& st);

/// Unit-speed state at (u0, v0) with prescribed slant c; u' carries
/// `u_sign` and v' is solved from F u' + omega^2 v' = c. Requires
/// |c| <= omega(u0).
GeodesicState state_from_slant(const MetricProfile& p, double u0, double v0, double c,
                               int u_sign = +1);

/// Same, but from the launch angle theta0 against the orbit
/// (c = omega(u0) * cos(theta0)).
GeodesicState state_from_angle(const MetricProfile& p, double u0, double v0,
                               double theta0, int u_sign = +1);

/// Integrates the geodesic equations as a first-order system in
/// (u, v, u', v') to the requested arclength. The initial state must be
/// unit speed to 1e-10 and start in the domain interior. Exiting the
/// domain truncates the path (PathStatus::DomainExit); a step-size
/// underflow throws IntegratorStall.
GeodesicPath integrate_geodesic(const MetricProfile& p, const GeodesicState& init,
                                double length, IntegrationControl ctrl = {});

/// Integrates until u crosses u_target (plus a little margin so callers can
/// interpolate). Stops at s_cap if the crossing is never reached.
GeodesicPath integrate_until_u(const MetricProfile& p, const GeodesicState& init,
                               double u_target, double s_cap = 1e4,
                               IntegrationControl ctrl = {});

/// The orbit u = u0 is a geodesic iff omega'(u0) vanishes.
bool is_orbit_geodesic(const MetricProfile& p, double u0, double tol);

/// Roots of omega(u) = |c| inside the bracket: sign changes on a scan grid
/// refined by bisection, plus tangential touches found through local
/// minima of omega - |c|.
std::vector<double> turning_points(const MetricProfile& p, double c, Interval bracket,
                                   double tol);

/// Angle theta between the state and the orbit through it:
/// theta = arccos((F u' + omega^2 v') / omega), the cosine clamped to
/// [-1, 1]; any clamping beyond 1e-12 is reported via `clamp_excess`.
double angle_with_orbit(const MetricProfile& p, const GeodesicState& st,
                        double* clamp_excess = nullptr);

/// Residuals of the first-order geodesic system
///   F u' + omega^2 v' = c,   u'^2 = 1 - c^2/omega^2
/// over a path. Throws NotApplicable for orbit paths (u' == 0 throughout).
Report first_order_system_check(const MetricProfile& p, const GeodesicPath& path,
                                double tol);

} // namespace invgeo
