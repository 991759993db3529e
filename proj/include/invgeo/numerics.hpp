#pragma once

#include <functional>
#include <vector>

#include "invgeo/interval.hpp"

namespace invgeo {

using Fn1 = std::function<double(double)>;

namespace fd {

/// Step rule used when no explicit step is given.
double default_step(double u, double base = 1e-5);

/// Second-order finite differences. Central stencils when both neighbours
/// fit inside the open domain, one-sided second-order stencils otherwise
/// (with the step shrunk to fit if needed).
double deriv(const Fn1& f, double u, double h, const Interval& dom);
double deriv2(const Fn1& f, double u, double h, const Interval& dom);

} // namespace fd

/// Refines a bracketed sign change of f to width <= tol. Requires
/// f(a) and f(b) of opposite sign.
double bisect(const Fn1& f, double a, double b, double tol, int max_iter = 200);

/// Golden-section minimizer; returns the abscissa of the minimum.
double minimize(const Fn1& f, double a, double b, double tol, int max_iter = 300);

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b]; b < a yields
/// the signed integral. Subdivides the worst segment until the accumulated
/// error estimate drops below max(abs_tol, rel_tol*|value|).
QuadResult integrate(const Fn1& f, double a, double b, double abs_tol,
                     double rel_tol = 0.0, int max_subdiv = 4000);

/// Like integrate(), but f may behave like 1/sqrt(|u - singular_end|) at
/// singular_end (which must be a or b). The last `delta` of the range is
/// integrated under the substitution u = end -+ t^2, which removes the
/// singularity.
QuadResult integrate_sqrt_singular(const Fn1& f, double a, double b,
                                   double singular_end, double delta,
                                   double abs_tol);

/// Natural cubic spline through strictly increasing nodes. Evaluations
/// outside the node range extrapolate the boundary cubic.
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double u) const;
    double deriv(double u) const;
    double deriv2(double u) const;

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_; // m_: second derivatives at the nodes
    std::size_t segment(double u) const;
};

} // namespace invgeo
