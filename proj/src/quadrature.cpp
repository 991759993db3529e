#include "invgeo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace invgeo {

namespace {

// Distance from the singular root within which the sqrt substitution is
// used instead of plain adaptive quadrature.
double singular_window(double c) { return 1e-3 * std::max(std::abs(c), 1e-3); }

} // namespace

QuadratureResult geodesic_by_quadrature(const MetricProfile& p, double c, double u0,
                                        double v0, double u_end, int sign, double tol,
                                        int grid_points) {
    if (u0 == u_end)
        throw Error("geodesic_by_quadrature: u0 must differ from u_end");
    if (sign != 1 && sign != -1)
        throw Error("geodesic_by_quadrature: sign must be +1 or -1");
    if (grid_points < 2)
        throw Error("geodesic_by_quadrature: need at least 2 grid points");
    const double ca = std::abs(c);

    // Scan for region violations strictly inside the segment.
    const int scan_n = 512;
    for (int i = 1; i < scan_n; ++i) {
        const double u = u0 + (u_end - u0) * i / scan_n;
        const double w = p.omega()(u);
        if (!(w > 0))
            throw NonpositiveOmega("omega <= 0 inside quadrature segment");
        if (w <= ca)
            throw SlantRegionViolation(
                "omega <= |c| inside the segment at u = " + std::to_string(u));
    }

    const double w0 = p.omega()(u0);
    const double w1 = p.omega()(u_end);
    if (w0 < ca || w1 < ca)
        throw SlantRegionViolation("omega < |c| at a segment endpoint");
    const double sing_tol = 1e-9 * std::max(1.0, ca);
    const bool singular_at_start = std::abs(w0 - ca) <= sing_tol && ca > 0;
    const bool singular_at_end = std::abs(w1 - ca) <= sing_tol && ca > 0;

    auto integrand = [&](double u) {
        const double w = p.omega()(u);
        const double F = p.F()(u);
        double val = -F / (w * w);
        if (c != 0) {
            const double radicand = std::max(w * w - c * c, 0.0);
            // inside the singular window the clamped radicand only matters
            // together with the sqrt substitution's Jacobian
            val += sign * c / (w * std::sqrt(std::max(radicand, 1e-300)));
        }
        return val;
    };

    QuadratureResult out;
    out.branch_sign = sign;
    out.u_grid.resize(static_cast<std::size_t>(grid_points));
    out.v_values.resize(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        out.u_grid[static_cast<std::size_t>(i)] =
            u0 + (u_end - u0) * i / (grid_points - 1);
    out.u_grid.front() = u0;
    out.u_grid.back() = u_end;
    out.v_values.front() = v0;

    const double seg_tol = tol / grid_points;
    const double delta = singular_window(c);
    double v = v0;
    for (int i = 1; i < grid_points; ++i) {
        const double a = out.u_grid[static_cast<std::size_t>(i - 1)];
        const double b = out.u_grid[static_cast<std::size_t>(i)];
        QuadResult piece;
        const bool first = (i == 1);
        const bool last = (i == grid_points - 1);
        if (last && singular_at_end && !(first && singular_at_start)) {
            piece = integrate_sqrt_singular(integrand, a, b, b, delta, seg_tol);
        } else if (first && singular_at_start && !singular_at_end) {
            piece = integrate_sqrt_singular(integrand, a, b, a, delta, seg_tol);
        } else if (first && last && singular_at_start && singular_at_end) {
            const double mid = 0.5 * (a + b);
            const auto p1 = integrate_sqrt_singular(integrand, a, mid, a, delta, seg_tol);
            const auto p2 = integrate_sqrt_singular(integrand, mid, b, b, delta, seg_tol);
            piece = {p1.value + p2.value, p1.error_estimate + p2.error_estimate};
        } else {
            piece = integrate(integrand, a, b, seg_tol);
        }
        v += piece.value;
        out.v_values[static_cast<std::size_t>(i)] = v;
        out.estimated_error += piece.error_estimate;
    }
    return out;
}

} // namespace invgeo
