#pragma once

#include "invgeo/profile.hpp"

namespace invgeo {

enum class CurvatureCase { Positive, Negative, Flat };

/// Solution of omega'' + K omega = 0 with omega(0) = omega0 > 0,
/// omega'(0) = domega0, restricted to the maximal interval around 0 where
/// omega > 0.
struct OmegaSolution {
    CurvatureCase curvature_case = CurvatureCase::Flat;
    double K = 0.0;
    double A = 1.0, B = 0.0; // coefficients in the fundamental basis
    Interval domain;

    double omega(double u) const;
    double omega_u(double u) const;
    double omega_uu(double u) const;

    HorizontalProfile profile() const;
};

OmegaSolution solve_omega(double K, double omega0, double domega0);

/// The first integral conserved along constant-curvature profiles:
///   omega^2 + R^2 omega'^2  (K = 1/R^2),
///   omega^2 - R^2 omega'^2  (K = -1/R^2),
///   omega'                  (K = 0).
double first_integral_a(CurvatureCase curvature_case, double R, double omega,
                        double domega);

/// Constant-curvature geodesic family: the curvature case with its radius
/// R, the first integral a, the slant c != 0 and the additive integration
/// constant b.
struct ClosedFormFamily {
    CurvatureCase curvature_case = CurvatureCase::Flat;
    double R = 1.0;
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    static ClosedFormFamily positive(double R, double a, double c, double b = 0.0);
    static ClosedFormFamily negative(double R, double a, double c, double b = 0.0);
    static ClosedFormFamily flat(double a, double c, double b = 0.0);
};

/// v(u) of the geodesic with the family's slant on the horizontal profile
/// generated by `omega`. The formula is selected by the curvature case and
/// (for negative curvature) by comparing a against 0 and c^2; a boundary
/// match within 1e-12 uses the limiting formula. Arguments leaving the
/// range of arcsin/log/etc. throw BranchDomainError.
double closed_form_v(const ClosedFormFamily& fam, const OmegaSolution& omega, double u);

/// Compares closed_form_v against both the quadrature representation and
/// the integrated geodesic over u_range, modulo the additive constant and
/// the branch sign.
Report crosscheck_closed_form(const ClosedFormFamily& fam, const OmegaSolution& omega,
                              Interval u_range, double c, double tol);

} // namespace invgeo
