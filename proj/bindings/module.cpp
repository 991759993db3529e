#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invgeo/closed_forms.hpp"
#include "invgeo/geodesic.hpp"
#include "invgeo/io.hpp"
#include "invgeo/quadrature.hpp"
#include "invgeo/spaces.hpp"

namespace py = pybind11;
using namespace invgeo;

namespace {

AmbientPoint to_point(const std::array<double, 3>& p) { return {p[0], p[1], p[2]}; }

std::array<double, 3> from_point(const AmbientPoint& p) { return {p.x, p.y, p.z}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Geodesics on invariant surfaces of three-dimensional manifolds";

    py::register_exception<Error>(m, "InvgeoError");

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("contains", &Interval::contains)
        .def("__repr__", [](const Interval& i) {
            return "Interval(" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + ")";
        });

    py::class_<Report>(m, "Report")
        .def_readonly("max_residual", &Report::max_residual)
        .def_readonly("pass_", &Report::pass)
        .def("__bool__", [](const Report& r) { return r.pass; });

    py::class_<MetricProfile>(m, "MetricProfile")
        .def_property_readonly("domain", &MetricProfile::domain)
        .def("E", [](const MetricProfile& p, double u) { return p.E()(u); })
        .def("F", [](const MetricProfile& p, double u) { return p.F()(u); })
        .def("omega", [](const MetricProfile& p, double u) { return p.omega()(u); })
        .def("omega_deriv",
             [](const MetricProfile& p, double u) { return p.omega().deriv(u); })
        .def("G", &MetricProfile::G);

    // profile constructors
    m.def("funnel_profile",
          []() { return funnel_profile().metric(); });
    m.def("catenoid_profile", []() { return catenoid_profile().metric(); });
    m.def("g34_profile", [](double b) { return g34_profile(b).metric(); }, py::arg("b"));
    m.def("g24_profile",
          [](double a, double b) { return g24_profile(a, b).metric(); }, py::arg("a"),
          py::arg("b"));
    m.def("g24_slanted_profile", &g24_slanted_profile, py::arg("a"), py::arg("b"));
    m.def("g14_profile", [](double b) { return g14_profile(b).metric(); }, py::arg("b"));
    m.def("bcv_profile",
          [](double ell, double mm) { return bcv_profile(ell, mm).metric(); },
          py::arg("ell"), py::arg("m"));
    m.def("profile_for_space",
          [](const std::string& tag) { return profile_for_space(parse_space_tag(tag)); },
          py::arg("space_tag"));
    m.def(
        "make_profile",
        [](const std::function<double(double)>& omega, double lo, double hi) {
            const Interval dom(lo, hi);
            return MetricProfile(dom, ScalarProfile::constant(1.0),
                                 ScalarProfile::constant(0.0),
                                 ScalarProfile::finite_difference(omega, dom));
        },
        py::arg("omega"), py::arg("lo"), py::arg("hi"),
        "Horizontal profile from a Python omega(u) callable; derivatives by "
        "finite differences.");
    m.def(
        "tabulated_profile",
        [](std::vector<double> u, std::vector<double> omega, std::vector<double> E,
           std::vector<double> F) {
            ProfileDescription d;
            d.kind = "tabulated";
            d.u = std::move(u);
            d.omega = std::move(omega);
            d.E = std::move(E);
            d.F = std::move(F);
            return build_profile(d);
        },
        py::arg("u"), py::arg("omega"), py::arg("E") = std::vector<double>{},
        py::arg("F") = std::vector<double>{});
    m.def("catalog_names", []() {
        std::vector<std::string> names;
        for (const auto& e : catalog())
            names.push_back(e.name);
        return names;
    });
    m.def("catalog_profile", [](const std::string& name) {
        const auto* e = catalog_lookup(name);
        if (!e)
            throw Error("unknown catalog profile '" + name + "'");
        return e->profile;
    });

    // surface checks
    m.def("validate_metric_identity", &validate_metric_identity, py::arg("profile"),
          py::arg("samples"), py::arg("tol"));
    m.def("gauss_curvature", &gauss_curvature, py::arg("profile"), py::arg("u"));
    m.def("verify_constant_curvature", &verify_constant_curvature, py::arg("profile"),
          py::arg("K"), py::arg("samples"), py::arg("tol"));

    // spaces
    m.def("killing_field",
          [](const std::string& tag, const std::array<double, 3>& p) {
              return killing_field(parse_space_tag(tag), to_point(p));
          },
          py::arg("space_tag"), py::arg("point"));
    m.def("metric_dot",
          [](const std::string& tag, const std::array<double, 3>& p, const Vec3& v,
             const Vec3& w) {
              return metric_dot(parse_space_tag(tag), to_point(p), v, w);
          },
          py::arg("space_tag"), py::arg("point"), py::arg("v"), py::arg("w"));
    m.def("omega_at",
          [](const std::string& tag, const std::array<double, 3>& p) {
              return omega_at(parse_space_tag(tag), to_point(p));
          },
          py::arg("space_tag"), py::arg("point"));
    m.def("hyperbolic_distance", &hyperbolic_distance, py::arg("xp"), py::arg("yp"),
          py::arg("xq"), py::arg("yq"));
    m.def("clairaut_in_distance",
          [](const std::string& tag, double d, double theta, int epsilon) {
              return clairaut_in_distance(parse_space_tag(tag), d, theta, epsilon);
          },
          py::arg("space_tag"), py::arg("d"), py::arg("theta"), py::arg("epsilon") = 1);
    m.def("radius_from_distance",
          [](double ell, double mm, double d) {
              return radius_from_distance(BCV{ell, mm}, d);
          },
          py::arg("ell"), py::arg("m"), py::arg("d"));
    m.def("distance_from_radius",
          [](double ell, double mm, double r) {
              return distance_from_radius(BCV{ell, mm}, r);
          },
          py::arg("ell"), py::arg("m"), py::arg("r"));
    m.def("funnel_embedding",
          [](double u, double v) { return from_point(funnel_embedding(u, v)); },
          py::arg("u"), py::arg("v"));
    m.def("orbit_omega",
          [](const std::string& tag, const std::array<double, 3>& p) {
              const auto orb = orbit_descriptor(parse_space_tag(tag), to_point(p));
              return py::make_tuple(orb.omega, orb.geometric_distance
                                                   ? py::object(py::float_(
                                                         *orb.geometric_distance))
                                                   : py::object(py::none()));
          },
          py::arg("space_tag"), py::arg("point"),
          "(omega, geometric distance) of the orbit through the point.");
    m.def("horizontal_lift_g34",
          [](const std::function<std::array<double, 2>(double)>& curve, double b,
             const std::array<double, 3>& init, double s_lo, double s_hi) {
              auto lift = horizontal_lift_g34(curve, b, to_point(init),
                                              Interval(s_lo, s_hi));
              return std::function<std::array<double, 3>(double)>(
                  [lift](double s) { return from_point(lift(s)); });
          },
          py::arg("curve"), py::arg("b"), py::arg("init"), py::arg("s_lo"),
          py::arg("s_hi"));

    // geodesic engine
    py::class_<GeodesicState>(m, "GeodesicState")
        .def(py::init([](double s, double u, double v, double du, double dv) {
                 return GeodesicState{s, u, v, du, dv};
             }),
             py::arg("s") = 0.0, py::arg("u") = 0.0, py::arg("v") = 0.0,
             py::arg("du") = 0.0, py::arg("dv") = 0.0)
        .def_readonly("s", &GeodesicState::s)
        .def_readonly("u", &GeodesicState::u)
        .def_readonly("v", &GeodesicState::v)
        .def_readonly("du", &GeodesicState::du)
        .def_readonly("dv", &GeodesicState::dv);

    py::class_<GeodesicPath>(m, "GeodesicPath")
        .def_property_readonly("states",
                               [](const GeodesicPath& p) { return p.states; })
        .def_property_readonly("slant",
                               [](const GeodesicPath& p) { return p.slant.c; })
        .def_property_readonly("max_slant_drift",
                               [](const GeodesicPath& p) {
                                   return p.diagnostics.max_slant_drift;
                               })
        .def_property_readonly("max_speed_drift",
                               [](const GeodesicPath& p) {
                                   return p.diagnostics.max_speed_drift;
                               })
        .def_property_readonly("turning_points",
                               [](const GeodesicPath& p) {
                                   return p.diagnostics.turning_points;
                               })
        .def_property_readonly("completed", [](const GeodesicPath& p) {
            return p.status == PathStatus::Completed;
        });

    m.def("clairaut_slant",
          [](const MetricProfile& p, const GeodesicState& st) {
              return clairaut_slant(p, st).c;
          },
          py::arg("profile"), py::arg("state"));
    m.def("state_from_slant", &state_from_slant, py::arg("profile"), py::arg("u0"),
          py::arg("v0"), py::arg("c"), py::arg("u_sign") = 1);
    m.def("state_from_angle", &state_from_angle, py::arg("profile"), py::arg("u0"),
          py::arg("v0"), py::arg("theta0"), py::arg("u_sign") = 1);
    m.def(
        "integrate_geodesic",
        [](const MetricProfile& p, const GeodesicState& init, double length,
           double abs_tol, double rel_tol, double max_step) {
            return integrate_geodesic(p, init, length, {abs_tol, rel_tol, max_step});
        },
        py::arg("profile"), py::arg("init"), py::arg("length"),
        py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10,
        py::arg("max_step") = 0.1);
    m.def("is_orbit_geodesic", &is_orbit_geodesic, py::arg("profile"), py::arg("u0"),
          py::arg("tol"));
    m.def(
        "turning_points",
        [](const MetricProfile& p, double c, double lo, double hi, double tol) {
            return turning_points(p, c, Interval(lo, hi), tol);
        },
        py::arg("profile"), py::arg("c"), py::arg("lo"), py::arg("hi"),
        py::arg("tol") = 1e-10);
    m.def("angle_with_orbit",
          [](const MetricProfile& p, const GeodesicState& st) {
              return angle_with_orbit(p, st);
          },
          py::arg("profile"), py::arg("state"));
    m.def("first_order_system_check", &first_order_system_check, py::arg("profile"),
          py::arg("path"), py::arg("tol"));

    // quadrature
    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("u_grid", &QuadratureResult::u_grid)
        .def_readonly("v_values", &QuadratureResult::v_values)
        .def_readonly("branch_sign", &QuadratureResult::branch_sign)
        .def_readonly("estimated_error", &QuadratureResult::estimated_error);
    m.def("geodesic_by_quadrature", &geodesic_by_quadrature, py::arg("profile"),
          py::arg("c"), py::arg("u0"), py::arg("v0"), py::arg("u_end"),
          py::arg("sign") = 1, py::arg("tol") = 1e-10, py::arg("grid_points") = 129);

    // closed forms
    py::enum_<CurvatureCase>(m, "CurvatureCase")
        .value("Positive", CurvatureCase::Positive)
        .value("Negative", CurvatureCase::Negative)
        .value("Flat", CurvatureCase::Flat);

    py::class_<OmegaSolution>(m, "OmegaSolution")
        .def_readonly("K", &OmegaSolution::K)
        .def_readonly("domain", &OmegaSolution::domain)
        .def("omega", &OmegaSolution::omega)
        .def("omega_u", &OmegaSolution::omega_u)
        .def("profile", [](const OmegaSolution& s) { return s.profile().metric(); });
    m.def("solve_omega", &solve_omega, py::arg("K"), py::arg("omega0"),
          py::arg("domega0"));

    py::class_<ClosedFormFamily>(m, "ClosedFormFamily")
        .def_static("positive", &ClosedFormFamily::positive, py::arg("R"), py::arg("a"),
                    py::arg("c"), py::arg("b") = 0.0)
        .def_static("negative", &ClosedFormFamily::negative, py::arg("R"), py::arg("a"),
                    py::arg("c"), py::arg("b") = 0.0)
        .def_static("flat", &ClosedFormFamily::flat, py::arg("a"), py::arg("c"),
                    py::arg("b") = 0.0)
        .def_readonly("R", &ClosedFormFamily::R)
        .def_readonly("a", &ClosedFormFamily::a)
        .def_readonly("b", &ClosedFormFamily::b)
        .def_readonly("c", &ClosedFormFamily::c);
    m.def("first_integral_a", &first_integral_a, py::arg("curvature_case"),
          py::arg("R"), py::arg("omega"), py::arg("domega"));
    m.def("closed_form_v", &closed_form_v, py::arg("family"), py::arg("omega"),
          py::arg("u"));
    m.def(
        "crosscheck_closed_form",
        [](const ClosedFormFamily& fam, const OmegaSolution& sol, double lo, double hi,
           double c, double tol) {
            return crosscheck_closed_form(fam, sol, Interval(lo, hi), c, tol);
        },
        py::arg("family"), py::arg("omega"), py::arg("lo"), py::arg("hi"), py::arg("c"),
        py::arg("tol"));

    m.attr("__version__") = "0.1.0";
}
