#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invgeo/profile.hpp"

namespace invgeo {

// ---------------------------------------------------------------------------
// Ambient model spaces and their one-parameter isometry groups.
//
// Coordinates: Euclidean (x,y,z); H^2 x R uses the half-plane model
// {y > 0} for the hyperbolic factor, metric (dx^2+dy^2)/y^2 + dz^2; the
// Bianchi-Cartan-Vranceanu family uses the global chart of the metric
//   (dx^2+dy^2)/(1+m r^2)^2 + (dz + (l/2) (y dx - x dy)/(1+m r^2))^2,
// defined on all of R^3 for m >= 0 and on {r^2 < -1/m} otherwise.
// ---------------------------------------------------------------------------

struct EuclideanRotational {}; // rotations about the z-axis

struct H2xR_G24 { // generated by a*X2 + b*X4 (X2 = d/dx, X4 = d/dz)
    double a = 1.0, b = 0.0;
};

struct H2xR_G34 { // generated by X3 + b*X4 (X3 = x d/dx + y d/dy)
    double b = 0.0;
};

struct H2xR_G14 { // generated by X1 + b*X4, X1 = ((x^2-y^2+1)/2) d/dx + xy d/dy
    double b = 0.0;
};

struct BCV { // rotations about the z-axis of g_{l,m}
    double ell = 0.0, m = 0.0;
};

using AmbientSpace =
    std::variant<EuclideanRotational, H2xR_G24, H2xR_G34, H2xR_G14, BCV>;

struct AmbientPoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

using Vec3 = std::array<double, 3>;

/// Components of the generating Killing field at p.
Vec3 killing_field(const AmbientSpace& space, const AmbientPoint& p);

/// Ambient metric applied to two tangent vectors at p.
double metric_dot(const AmbientSpace& space, const AmbientPoint& p,
                  const Vec3& v, const Vec3& w);

/// Orbit speed ||X|| at p by the per-space closed formula. Throws
/// SingularOrbit where the orbit degenerates to a point (omega = 0).
double omega_at(const AmbientSpace& space, const AmbientPoint& p);

/// Hyperbolic distance between two points of the half-plane model,
/// via the geodesic circle through them (vertical-line branch when
/// the abscissae coincide).
double hyperbolic_distance(double xp, double yp, double xq, double yq);

/// Left-hand side omega(d) * cos(theta) of the per-space Clairaut relation
/// expressed in the orbit's geometric distance invariant d. For G24 the
/// sign `epsilon` (sign of 1 - y0) selects the side of the plane y = 1.
double clairaut_in_distance(const AmbientSpace& space, double d, double theta,
                            int epsilon = +1);

/// Conversions between the Euclidean orbit radius r and the geodesic
/// radius d of a BCV rotational orbit.
double radius_from_distance(const BCV& space, double d);
double distance_from_radius(const BCV& space, double r);

/// An orbit of the group action together with its invariants.
struct OrbitDescriptor {
    AmbientSpace space;
    AmbientPoint through;
    std::function<AmbientPoint(double)> curve; // curve(0) == through
    double omega = 0.0;
    std::optional<double> geometric_distance;
};

OrbitDescriptor orbit_descriptor(const AmbientSpace& space, const AmbientPoint& p);

// ---------------------------------------------------------------------------
// Fixtures: concrete invariant surfaces with closed-form profiles.
// ---------------------------------------------------------------------------

/// The funnel surface of H^2 x R (G34-invariant, b = 1):
/// E = 1, F = 0, omega^2 = 2 + sinh^2 u.
HorizontalProfile funnel_profile();

/// Embedding psi(u,v) = (-e^v tanh u, e^v sech u, v) of the funnel surface.
AmbientPoint funnel_embedding(double u, double v);

/// G34-invariant surface over the quotient curve xi2 = const:
/// omega^2 = cosh^2 u + b^2 (equals the funnel for b = 1).
HorizontalProfile g34_profile(double b);

/// Catenoid of revolution in R^3, profile by arclength: omega = sqrt(1+u^2).
HorizontalProfile catenoid_profile();

/// G24-invariant sheet over the quotient curve xi2 = const:
/// omega^2 = a^2 e^{-2u} + b^2.
HorizontalProfile g24_profile(double a, double b);

/// Same surface with a slanted (non-horizontal) lift of the profile curve;
/// exercises E != 1, F != 0 while preserving E*omega^2 - F^2 = omega^2.
MetricProfile g24_slanted_profile(double a, double b);

/// G14-invariant rotational surface through x = 0: omega^2 = sinh^2 u + b^2.
/// For b = 0 the axis point is singular, so b != 0 is required.
HorizontalProfile g14_profile(double b);

/// BCV rotational surface in a horizontal slice, parametrized by geodesic
/// radius u: omega(u) = r sqrt(4 + l^2 r^2) / (2 (1 + m r^2)), r = r(u).
HorizontalProfile bcv_profile(double ell, double m);

/// Horizontal lift of a quotient-space curve s -> (xi1(s), xi2(s)) of the
/// G34 action, integrated from `init` over `s_range`. The returned curve
/// is orthogonal to X3 + b*X4 everywhere. xi1 must stay inside (0, pi).
std::function<AmbientPoint(double)>
horizontal_lift_g34(const std::function<std::array<double, 2>(double)>& profile_curve,
                    double b, const AmbientPoint& init, Interval s_range);

// ---------------------------------------------------------------------------
// Catalog and CLI addressing.
// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string name;
    AmbientSpace space;
    MetricProfile profile;
    Interval sample_window; // interior window safe for random launches
};

/// Named profiles used by the check suites and the CLI `--fixture` flag.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_lookup(const std::string& name);

/// Canonical profile of a space's standard invariant surface.
MetricProfile profile_for_space(const AmbientSpace& space);

/// Parses "r3-rot", "h2r-g24:a,b", "h2r-g34:b", "h2r-g14:b", "bcv:ell,m".
AmbientSpace parse_space_tag(const std::string& tag);
std::string space_tag(const AmbientSpace& space);

} // namespace invgeo
