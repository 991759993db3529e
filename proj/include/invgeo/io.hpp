#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "invgeo/closed_forms.hpp"
#include "invgeo/geodesic.hpp"
#include "invgeo/quadrature.hpp"
#include "invgeo/spaces.hpp"

namespace invgeo {

/// JSON-serializable description of a metric profile.
///
/// Analytic profiles name a family with parameters:
///   funnel | g34 {b} | catenoid | g24 {a,b} | g24-slanted {a,b} |
///   g14 {b} | bcv {ell,m} | constant-curvature {K,omega0,domega0} |
///   linear {omega0,slope} | constant {omega0}
/// Tabulated profiles carry a strictly increasing u grid with omega and
/// optional E, F columns, interpolated by natural cubic splines.
struct ProfileDescription {
    std::string kind; // "analytic" | "tabulated"
    bool has_domain = false;
    Interval domain;

    std::string family;
    std::map<std::string, double> params;

    std::vector<double> u, omega, E, F;
};

MetricProfile build_profile(const ProfileDescription& desc);

ProfileDescription profile_description_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProfileDescription& desc);

/// Samples a profile into a tabulated description (always serializable).
ProfileDescription tabulate_profile(const MetricProfile& p, int samples);

ProfileDescription load_profile_file(const std::string& path);

// --- geodesic paths ---

/// Columns: s,u,v,du,dv,omega,theta,slant_residual,speed_residual
void write_path_csv(std::ostream& os, const MetricProfile& p, const GeodesicPath& path);

struct PathCsv {
    std::vector<GeodesicState> states;
    std::vector<double> omega, theta, slant_residual, speed_residual;
};
PathCsv read_path_csv(std::istream& is);

nlohmann::json path_to_json(const MetricProfile& p, const GeodesicPath& path);

// --- quadrature results ---

void write_quadrature_csv(std::ostream& os, const QuadratureResult& q);
nlohmann::json quadrature_to_json(const QuadratureResult& q);

// --- ambient curves (orbits, lifts) ---

/// Columns: s,x,y,z sampled uniformly over [lo, hi].
void write_curve_csv(std::ostream& os,
                     const std::function<AmbientPoint(double)>& curve, double lo,
                     double hi, int samples);

// --- closed-form families ---

nlohmann::json to_json(const ClosedFormFamily& fam);
ClosedFormFamily closed_form_family_from_json(const nlohmann::json& j);

// --- plotting ---

struct SvgSeries {
    std::vector<std::pair<double, double>> points;
    std::string label;
    std::string color = "#1f6fb2";
};

struct SvgPanel {
    std::vector<SvgSeries> series;
    std::string title, xlabel, ylabel;
};

/// Static polyline plot; panels are laid out side by side.
void write_svg(std::ostream& os, const std::vector<SvgPanel>& panels);

} // namespace invgeo
