#pragma once

#include <vector>

#include "invgeo/profile.hpp"

namespace invgeo {

struct QuadratureResult {
    std::vector<double> u_grid;
    std::vector<double> v_values;
    int branch_sign = +1;
    double estimated_error = 0.0;
};

/// Evaluates the integral representation of a non-orbit geodesic,
///   v(u) = v0 + int_{u0}^{u} ( -F/omega^2 + sign * c/(omega sqrt(omega^2 - c^2)) ) du,
/// on a uniform grid of `grid_points` between u0 and u_end. omega must
/// exceed |c| strictly inside the segment (SlantRegionViolation otherwise);
/// an endpoint where omega = |c| (a turning point) is integrable and is
/// handled by the substitution omega^2 - c^2 = t^2.
QuadratureResult geodesic_by_quadrature(const MetricProfile& p, double c, double u0,
                                        double v0, double u_end, int sign, double tol,
                                        int grid_points = 129);

} // namespace invgeo
