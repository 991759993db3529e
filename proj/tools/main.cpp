#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invgeo/closed_forms.hpp"
#include "invgeo/geodesic.hpp"
#include "invgeo/io.hpp"
#include "invgeo/quadrature.hpp"
#include "invgeo/spaces.hpp"

namespace {

using namespace invgeo;
using nlohmann::json;

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("GEOD_LOG");
        if (!env)
            return 0;
        const std::string v(env);
        if (v == "debug" || v == "2")
            return 2;
        if (v == "info" || v == "1")
            return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1)
        std::cerr << "[invgeo] " << msg << "\n";
}

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProfileOptions {
    std::string fixture;
    std::string profile_file;
    std::string space;
};

struct ResolvedProfile {
    MetricProfile profile;
    std::string name;
    std::optional<AmbientSpace> space;
};

ResolvedProfile resolve_profile(const ProfileOptions& opt) {
    const int sources = (!opt.fixture.empty()) + (!opt.profile_file.empty());
    if (sources > 1)
        throw ConfigError("--fixture and --profile-file are mutually exclusive");
    if (sources == 0 && opt.space.empty())
        throw ConfigError("one of --fixture, --profile-file or --space is required");

    std::optional<AmbientSpace> space;
    if (!opt.space.empty())
        space = parse_space_tag(opt.space);

    if (!opt.fixture.empty()) {
        const CatalogEntry* e = catalog_lookup(opt.fixture);
        if (!e)
            throw ConfigError("unknown fixture '" + opt.fixture + "'");
        if (space && space_tag(*space) != space_tag(e->space))
            throw ConfigError("--space " + space_tag(*space) +
                              " conflicts with fixture '" + e->name + "' (lives in " +
                              space_tag(e->space) + ")");
        return {e->profile, e->name, e->space};
    }
    if (!opt.profile_file.empty()) {
        if (space)
            throw ConfigError("--space and --profile-file are mutually exclusive");
        return {build_profile(load_profile_file(opt.profile_file)), opt.profile_file,
                std::nullopt};
    }
    return {profile_for_space(*space), space_tag(*space), space};
}

struct LaunchOptions {
    double u0 = 0.0, v0 = 0.0;
    std::optional<double> slant, theta0;
    int udir = +1;
};

GeodesicState resolve_launch(const MetricProfile& p, const LaunchOptions& opt) {
    if (opt.slant.has_value() == opt.theta0.has_value())
        throw ConfigError("exactly one of --slant or --theta0 is required");
    if (!p.domain().contains(opt.u0))
        throw ConfigError("u0 outside the profile domain");
    double c;
    if (opt.theta0) {
        c = p.omega()(opt.u0) * std::cos(*opt.theta0);
        log_info("theta0 " + std::to_string(*opt.theta0) + " -> slant c = " +
                 std::to_string(c));
        std::cerr << "# slant c = " << c << " (from theta0 = " << *opt.theta0 << ")\n";
    } else {
        c = *opt.slant;
    }
    return state_from_slant(p, opt.u0, opt.v0, c, opt.udir);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw ConfigError("cannot open output file '" + path + "'");
    return file;
}

// Ambient (x, y) projection for fixtures with known embeddings.
std::optional<std::vector<std::pair<double, double>>>
ambient_projection(const std::string& name, const GeodesicPath& path) {
    std::vector<std::pair<double, double>> pts;
    if (name == "funnel") {
        for (const auto& st : path.states) {
            const auto q = funnel_embedding(st.u, st.v);
            pts.emplace_back(q.x, q.y);
        }
        return pts;
    }
    if (name == "catenoid") {
        for (const auto& st : path.states) {
            const double r = std::sqrt(1.0 + st.u * st.u);
            pts.emplace_back(r * std::cos(st.v), r * std::sin(st.v));
        }
        return pts;
    }
    return std::nullopt;
}

int cmd_trace(const ProfileOptions& popt, const LaunchOptions& lopt, double length,
              const IntegrationControl& ctrl, const std::string& format,
              const std::string& out_path) {
    const auto rp = resolve_profile(popt);
    const auto init = resolve_launch(rp.profile, lopt);
    const auto path = integrate_geodesic(rp.profile, init, length, ctrl);
    log_info("trace: " + std::to_string(path.states.size()) + " states, slant drift " +
             std::to_string(path.diagnostics.max_slant_drift));

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "csv") {
        write_path_csv(os, rp.profile, path);
    } else if (format == "json") {
        os << path_to_json(rp.profile, path).dump(2) << "\n";
    } else if (format == "svg") {
        SvgPanel intrinsic;
        SvgSeries uv;
        for (const auto& st : path.states)
            uv.points.emplace_back(st.u, st.v);
        uv.label = "geodesic";
        intrinsic.series.push_back(uv);
        intrinsic.title = rp.name + " (profile coordinates)";
        intrinsic.xlabel = "u";
        intrinsic.ylabel = "v";
        std::vector<SvgPanel> panels{intrinsic};
        if (auto amb = ambient_projection(rp.name, path)) {
            SvgPanel ambient;
            ambient.series.push_back({*amb, "projection", "#d1495b"});
            ambient.title = rp.name + " (ambient projection)";
            ambient.xlabel = "x";
            ambient.ylabel = "y";
            panels.push_back(ambient);
        }
        write_svg(os, panels);
    } else {
        throw ConfigError("unknown format '" + format + "'");
    }
    return 0;
}

int cmd_quadrature(const ProfileOptions& popt, const LaunchOptions& lopt, double u_end,
                   int sign, double tol, int grid, const std::string& format,
                   const std::string& out_path) {
    const auto rp = resolve_profile(popt);
    if (lopt.slant.has_value() == lopt.theta0.has_value())
        throw ConfigError("exactly one of --slant or --theta0 is required");
    const double c = lopt.slant ? *lopt.slant
                                : rp.profile.omega()(lopt.u0) * std::cos(*lopt.theta0);
    const auto q =
        geodesic_by_quadrature(rp.profile, c, lopt.u0, lopt.v0, u_end, sign, tol, grid);
    log_info("quadrature: estimated error " + std::to_string(q.estimated_error));

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "csv") {
        write_quadrature_csv(os, q);
    } else if (format == "json") {
        os << quadrature_to_json(q).dump(2) << "\n";
    } else if (format == "svg") {
        SvgPanel panel;
        SvgSeries s;
        for (std::size_t i = 0; i < q.u_grid.size(); ++i)
            s.points.emplace_back(q.u_grid[i], q.v_values[i]);
        panel.series.push_back(s);
        panel.title = rp.name + " (quadrature)";
        panel.xlabel = "u";
        panel.ylabel = "v";
        write_svg(os, {panel});
    } else {
        throw ConfigError("unknown format '" + format + "'");
    }
    return 0;
}

std::array<double, 3> parse_triple(const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    std::array<double, 3> out{};
    std::size_t i = 0;
    while (std::getline(ss, item, ',') && i < 3)
        out[i++] = std::stod(item);
    if (i != 3)
        throw ConfigError("expected three comma-separated coordinates");
    return out;
}

int cmd_orbit(const std::string& space_tag_str, const std::string& point_str,
              double v_lo, double v_hi, int samples, const std::string& out_path) {
    if (space_tag_str.empty())
        throw ConfigError("--space is required");
    const auto space = parse_space_tag(space_tag_str);
    const auto p = parse_triple(point_str);
    const auto orb = orbit_descriptor(space, {p[0], p[1], p[2]});
    log_info("orbit omega = " + std::to_string(orb.omega));
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    write_curve_csv(os, orb.curve, v_lo, v_hi, samples);
    return 0;
}

int cmd_lift(const std::string& curve_spec, double b, const std::string& init_str,
             double s_lo, double s_hi, int samples, const std::string& out_path) {
    std::function<std::array<double, 2>(double)> curve;
    if (curve_spec == "funnel") {
        curve = [](double s) {
            return std::array<double, 2>{2.0 * std::atan(std::exp(s)), 0.0};
        };
    } else if (curve_spec.rfind("line:", 0) == 0) {
        // line:xi1_0,xi1_slope,xi2_0,xi2_slope
        std::stringstream ss(curve_spec.substr(5));
        std::string item;
        std::vector<double> q;
        while (std::getline(ss, item, ','))
            q.push_back(std::stod(item));
        if (q.size() != 4)
            throw ConfigError("line curve needs xi1_0,xi1_slope,xi2_0,xi2_slope");
        curve = [q](double s) {
            return std::array<double, 2>{q[0] + q[1] * s, q[2] + q[3] * s};
        };
    } else {
        throw ConfigError("unknown quotient curve '" + curve_spec +
                          "' (use funnel or line:...)");
    }
    const auto init = parse_triple(init_str);
    const auto lift =
        horizontal_lift_g34(curve, b, {init[0], init[1], init[2]}, Interval(s_lo, s_hi));
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    write_curve_csv(os, lift, s_lo, s_hi, samples);
    return 0;
}

// ---------------------------------------------------------------------------
// check suites
// ---------------------------------------------------------------------------

struct CheckItem {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    double tol = 0.0;
};

json item_json(const CheckItem& it) {
    return {{"name", it.name},
            {"pass", it.pass},
            {"max_residual", it.max_residual},
            {"tol", it.tol}};
}

CheckItem make_item(const std::string& name, double residual, double tol) {
    return {name, residual <= tol, residual, tol};
}

AmbientPoint random_point(const AmbientSpace& space, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.2, 2.5);
    return std::visit(
        [&](const auto& s) -> AmbientPoint {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EuclideanRotational>) {
                return {pos(rng), unit(rng), unit(rng)};
            } else if constexpr (std::is_same_v<T, BCV>) {
                double cap = s.m < 0 ? 0.95 / std::sqrt(-s.m) : 2.5;
                std::uniform_real_distribution<double> rad(0.05 * cap, 0.8 * cap);
                const double r = rad(rng);
                std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
                const double t = ang(rng);
                return {r * std::cos(t), r * std::sin(t), unit(rng)};
            } else {
                return {unit(rng), pos(rng), unit(rng)};
            }
        },
        space);
}

// omega from the closed formula vs the metric applied to the Killing field.
CheckItem check_omega_formula(const AmbientSpace& space, std::mt19937& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto p = random_point(space, rng);
        double w_formula;
        try {
            w_formula = omega_at(space, p);
        } catch (const SingularOrbit&) {
            continue;
        }
        const auto X = killing_field(space, p);
        const double w_metric = std::sqrt(metric_dot(space, p, X, X));
        worst = std::max(worst, std::abs(w_formula - w_metric));
    }
    return make_item("omega-formula-vs-metric " + space_tag(space), worst, 1e-9);
}

CheckItem check_orbit_invariance(const AmbientSpace& space, std::mt19937& rng) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto p = random_point(space, rng);
        OrbitDescriptor orb;
        try {
            orb = orbit_descriptor(space, p);
        } catch (const SingularOrbit&) {
            continue;
        }
        for (int k = -4; k <= 4; ++k) {
            const auto q = orb.curve(0.25 * k);
            worst = std::max(worst, std::abs(omega_at(space, q) - orb.omega));
        }
    }
    return make_item("orbit-invariance " + space_tag(space), worst, 1e-9);
}

// omega(r) cos(theta) against the geodesic-distance form of the relation.
CheckItem check_distance_form(const AmbientSpace& space, std::mt19937& rng) {
    double worst = 0.0;
    std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_point(space, rng);
        const double theta = ang(rng);
        try {
            const auto orb = orbit_descriptor(space, p);
            if (!orb.geometric_distance)
                continue;
            double lhs_pointwise = omega_at(space, p) * std::cos(theta);
            int eps = +1;
            if (std::holds_alternative<H2xR_G24>(space))
                eps = p.y < 1.0 ? +1 : (p.y > 1.0 ? -1 : 0);
            const double lhs_distance =
                clairaut_in_distance(space, *orb.geometric_distance, theta, eps);
            worst = std::max(worst, std::abs(lhs_pointwise - lhs_distance));
        } catch (const SingularOrbit&) {
            continue;
        }
    }
    return make_item("clairaut-distance-form " + space_tag(space), worst, 1e-9);
}

CheckItem check_slant_drift(const CatalogEntry& entry, std::mt19937& rng) {
    std::uniform_real_distribution<double> upos(entry.sample_window.lo,
                                                entry.sample_window.hi);
    std::uniform_real_distribution<double> ang(0.1, std::numbers::pi - 0.1);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const auto st = state_from_angle(entry.profile, upos(rng), 0.0, ang(rng),
                                         i % 2 ? -1 : +1);
        const auto path = integrate_geodesic(entry.profile, st, 10.0);
        worst = std::max(worst, path.diagnostics.max_slant_drift);
    }
    return make_item("slant-conservation " + entry.name, worst, 1e-8);
}

// The G34 distance invariant against the axis distance measured with
// hyperbolic_distance: the two differ, but 2 cosh d - 1 = cosh^2 d_axis
// ties them together; this item fails if that relation ever breaks.
CheckItem check_g34_distance_invariant(const H2xR_G34& g) {
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
        const double alpha = i * std::numbers::pi / 21.0;
        const AmbientPoint p{std::cos(alpha), std::sin(alpha), 0.0};
        const auto orb = orbit_descriptor(AmbientSpace(g), p);
        auto f = [&](double t) {
            return hyperbolic_distance(p.x, p.y, 0.0, std::exp(t));
        };
        const double d_axis = f(minimize(f, -8.0, 8.0, 1e-12));
        worst = std::max(worst,
                         std::abs(2.0 * std::cosh(*orb.geometric_distance) - 1.0 -
                                  std::cosh(d_axis) * std::cosh(d_axis)));
    }
    return make_item("g34-invariant-vs-axis-distance (2cosh d - 1 = cosh^2 d_axis)",
                     worst, 1e-9);
}

CheckItem check_bcv_h2r_equivalence() {
    // the hyperbolic BCV slice agrees with the G14 relation at b = 0
    const AmbientSpace bcv = BCV{0.0, -0.25};
    const AmbientSpace g14 = H2xR_G14{0.0};
    double worst = 0.0;
    for (int i = 1; i <= 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double d = 0.3 * i;
            const double theta = j * std::numbers::pi / 10;
            worst = std::max(worst, std::abs(clairaut_in_distance(bcv, d, theta) -
                                             clairaut_in_distance(g14, d, theta)));
        }
    return make_item("bcv(0,-1/4) matches g14(b=0)", worst, 1e-9);
}

std::vector<CheckItem> suite_metric_identity(const std::string& only_fixture) {
    std::vector<CheckItem> items;
    for (const auto& e : catalog()) {
        if (!only_fixture.empty() && e.name != only_fixture)
            continue;
        const auto rep = validate_metric_identity(e.profile, 200, 1e-9);
        items.push_back(make_item("metric-identity " + e.name, rep.max_residual, 1e-9));
    }
    // funnel pull-back computed from the embedding by finite differences
    if (only_fixture.empty() || only_fixture == "funnel") {
        const double h = 1e-5;
        double worst = 0.0;
        for (double u : {-1.0, -0.3, 0.0, 0.4, 1.0}) {
            const double v = 0.1;
            auto at = [&](double uu, double vv) { return funnel_embedding(uu, vv); };
            auto diff = [&](AmbientPoint a, AmbientPoint b, double hh) {
                return Vec3{(a.x - b.x) / (2 * hh), (a.y - b.y) / (2 * hh),
                            (a.z - b.z) / (2 * hh)};
            };
            const auto pu = diff(at(u + h, v), at(u - h, v), h);
            const auto pv = diff(at(u, v + h), at(u, v - h), h);
            const AmbientPoint q = at(u, v);
            const AmbientSpace amb = H2xR_G34{1.0};
            const double E = metric_dot(amb, q, pu, pu);
            const double F = metric_dot(amb, q, pu, pv);
            const double G = metric_dot(amb, q, pv, pv);
            const double w2 = 2.0 + std::sinh(u) * std::sinh(u);
            worst = std::max({worst, std::abs(E - 1.0), std::abs(F),
                              std::abs(E * G - F * F - w2)});
        }
        items.push_back(make_item("metric-identity funnel-pullback", worst, 1e-9));
    }
    return items;
}

std::vector<CheckItem> suite_clairaut(const std::string& only_space) {
    std::vector<CheckItem> items;
    std::mt19937 rng(20240811);
    for (const auto& e : catalog()) {
        if (!only_space.empty() && space_tag(e.space) != space_tag(parse_space_tag(only_space)))
            continue;
        items.push_back(check_omega_formula(e.space, rng));
        items.push_back(check_orbit_invariance(e.space, rng));
        items.push_back(check_distance_form(e.space, rng));
        items.push_back(check_slant_drift(e, rng));
        if (const auto* g34 = std::get_if<H2xR_G34>(&e.space))
            items.push_back(check_g34_distance_invariant(*g34));
    }
    if (only_space.empty() ||
        space_tag(parse_space_tag(only_space)) == space_tag(AmbientSpace(BCV{0.0, -0.25})))
        items.push_back(check_bcv_h2r_equivalence());
    if (items.empty())
        throw ConfigError("no catalog entry matches --space " + only_space);
    return items;
}

std::vector<CheckItem> suite_quadrature() {
    std::vector<CheckItem> items;
    struct Case {
        const char* fixture;
        double c, u_lo, u_hi;
    };
    const Case cases[] = {{"funnel", 1.0, 0.0, 2.0},
                          {"funnel", 0.5, -1.0, 1.5},
                          {"catenoid", 0.7, 0.1, 2.0},
                          {"g24-slanted", 0.5, -1.0, 1.0},
                          {"g14-rotational", 0.8, 0.2, 1.6}};
    for (const auto& cs : cases) {
        const auto* e = catalog_lookup(cs.fixture);
        const int n = 33;
        const auto q = geodesic_by_quadrature(e->profile, cs.c, cs.u_lo, 0.0, cs.u_hi,
                                              +1, 1e-10, n);
        IntegrationControl ctrl;
        ctrl.max_step = 0.02;
        const auto start = state_from_slant(e->profile, cs.u_lo, 0.0, cs.c, +1);
        const auto path = integrate_until_u(e->profile, start, cs.u_hi, 1e4, ctrl);
        double worst = 0.0;
        std::size_t j = 0;
        for (int i = 0; i < n; ++i) {
            const double u = q.u_grid[static_cast<std::size_t>(i)];
            while (j + 2 < path.states.size() && path.states[j + 1].u < u)
                ++j;
            const auto& p0 = path.states[j];
            const auto& p1 = path.states[j + 1];
            const double t = std::clamp((u - p0.u) / (p1.u - p0.u), 0.0, 1.0);
            const double hu = p1.u - p0.u;
            const double m0 = p0.dv / p0.du, m1 = p1.dv / p1.du;
            const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
            const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
            const double v_ode =
                h00 * p0.v + h10 * hu * m0 + h01 * p1.v + h11 * hu * m1;
            worst = std::max(worst,
                             std::abs(v_ode - q.v_values[static_cast<std::size_t>(i)]));
        }
        items.push_back(make_item(std::string("quadrature-vs-ode ") + cs.fixture +
                                      " c=" + std::to_string(cs.c),
                                  worst, 1e-6));
    }
    return items;
}

std::vector<CheckItem> suite_closed_forms() {
    std::vector<CheckItem> items;
    struct Case {
        const char* name;
        ClosedFormFamily fam;
        OmegaSolution sol;
        Interval range;
    };
    auto cosone = solve_omega(1.0, 1.0, 0.0);   // cos u
    auto coshone = solve_omega(-1.0, 1.0, 0.0); // cosh u
    auto expu = solve_omega(-1.0, 1.0, 1.0);    // e^u
    auto mixed = solve_omega(-1.0, 1.0, 2.0);   // cosh u + 2 sinh u, a = -3
    auto lin = solve_omega(0.0, 1.0, 1.0);      // 1 + u
    auto flat2 = solve_omega(0.0, 2.0, 0.0);    // constant 2

    std::vector<Case> cases;
    cases.push_back({"positive a>c^2 (cos, c=0.3)",
                     ClosedFormFamily::positive(1.0, 1.0, 0.3), cosone,
                     Interval(-1.0, 1.0)});
    cases.push_back({"negative a>c^2 (cosh, c=0.5)",
                     ClosedFormFamily::negative(1.0, 1.0, 0.5), coshone,
                     Interval(-1.0, 1.0)});
    cases.push_back({"negative a=c^2 (cosh, c=1)",
                     ClosedFormFamily::negative(1.0, 1.0, 1.0), coshone,
                     Interval(0.5, 1.5)});
    cases.push_back({"negative 0<a<c^2 (cosh, c=2)",
                     ClosedFormFamily::negative(1.0, 1.0, 2.0), coshone,
                     Interval(1.4, 2.2)});
    cases.push_back({"negative a<0 (cosh+2sinh, c=1)",
                     ClosedFormFamily::negative(1.0, -3.0, 1.0), mixed,
                     Interval(0.3, 1.3)});
    cases.push_back({"negative a=0 (e^u, c=1)",
                     ClosedFormFamily::negative(1.0, 0.0, 1.0), expu,
                     Interval(0.2, 1.2)});
    cases.push_back({"flat a!=0 (1+u, c=0.8)", ClosedFormFamily::flat(1.0, 0.8), lin,
                     Interval(0.0, 3.0)});
    cases.push_back({"flat a=0 (omega=2, c=1)", ClosedFormFamily::flat(0.0, 1.0), flat2,
                     Interval(-1.0, 2.0)});
    for (const auto& cs : cases) {
        const auto rep = crosscheck_closed_form(cs.fam, cs.sol, cs.range, cs.fam.c, 1e-7);
        items.push_back(make_item(std::string("closed-form ") + cs.name,
                                  rep.max_residual, 1e-7));
    }
    return items;
}

int cmd_check(const std::string& suite, const std::string& space,
              const std::string& fixture, const std::string& out_path) {
    json suites = json::array();
    bool all_pass = true;
    auto run = [&](const std::string& name, std::vector<CheckItem> items) {
        json jitems = json::array();
        bool pass = true;
        for (const auto& it : items) {
            jitems.push_back(item_json(it));
            pass = pass && it.pass;
        }
        suites.push_back({{"name", name}, {"pass", pass}, {"items", jitems}});
        all_pass = all_pass && pass;
    };

    if (suite == "all" || suite == "metric-identity")
        run("metric-identity", suite_metric_identity(fixture));
    if (suite == "all" || suite == "clairaut")
        run("clairaut", suite_clairaut(space));
    if (suite == "all" || suite == "quadrature")
        run("quadrature", suite_quadrature());
    if (suite == "all" || suite == "closed-forms")
        run("closed-forms", suite_closed_forms());
    if (suites.empty())
        throw ConfigError("unknown suite '" + suite + "'");

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << json{{"pass", all_pass}, {"suites", suites}}.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesics on invariant surfaces of 3-manifolds"};
    app.require_subcommand(1);

    ProfileOptions popt;
    LaunchOptions lopt;
    IntegrationControl ctrl;
    std::string format = "csv", out_path, suite = "all";
    double length = 10.0, u_end = 1.0, qtol = 1e-10;
    int sign = +1, grid = 129;

    auto add_profile_flags = [&](CLI::App* cmd) {
        cmd->add_option("--fixture", popt.fixture, "named catalog profile");
        cmd->add_option("--profile-file", popt.profile_file, "profile JSON file");
        cmd->add_option("--space", popt.space,
                        "space tag (r3-rot | h2r-g24:a,b | h2r-g34:b | h2r-g14:b | bcv:ell,m)");
    };
    auto add_launch_flags = [&](CLI::App* cmd) {
        cmd->add_option("--u0", lopt.u0, "launch u");
        cmd->add_option("--v0", lopt.v0, "launch v");
        cmd->add_option("--slant", [&lopt](const CLI::results_t& r) {
            lopt.slant = std::stod(r[0]);
            return true;
        }, "slant c of the geodesic");
        cmd->add_option("--theta0", [&lopt](const CLI::results_t& r) {
            lopt.theta0 = std::stod(r[0]);
            return true;
        }, "launch angle against the orbit");
        cmd->add_option("--udir", lopt.udir, "sign of u' at launch (+1/-1)");
    };

    auto* trace = app.add_subcommand("trace", "integrate a geodesic");
    add_profile_flags(trace);
    add_launch_flags(trace);
    trace->add_option("--length", length, "arclength to integrate");
    trace->add_option("--abs-tol", ctrl.abs_tol, "integrator absolute tolerance");
    trace->add_option("--rel-tol", ctrl.rel_tol, "integrator relative tolerance");
    trace->add_option("--format", format, "csv | json | svg");
    trace->add_option("--out", out_path, "output file (default stdout)");

    auto* quad = app.add_subcommand("quadrature",
                                    "evaluate the geodesic integral v(u)");
    add_profile_flags(quad);
    add_launch_flags(quad);
    quad->add_option("--u-end", u_end, "endpoint of the u segment")->required();
    quad->add_option("--sign", sign, "branch sign (+1/-1)");
    quad->add_option("--tol", qtol, "quadrature tolerance");
    quad->add_option("--grid", grid, "number of output grid points");
    quad->add_option("--format", format, "csv | json | svg");
    quad->add_option("--out", out_path, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--suite", suite,
                      "all | metric-identity | clairaut | quadrature | closed-forms");
    check->add_option("--space", popt.space, "restrict clairaut suite to one space");
    check->add_option("--fixture", popt.fixture, "restrict metric-identity suite");
    check->add_option("--out", out_path, "report file (default stdout)");

    std::string point_str = "0,1,0", init_str = "0,1,0", curve_spec = "funnel";
    double v_lo = -1.0, v_hi = 1.0, s_lo = -2.0, s_hi = 2.0, lift_b = 1.0;
    int curve_samples = 101;

    auto* orbit = app.add_subcommand("orbit", "export a group orbit as s,x,y,z CSV");
    orbit->add_option("--space", popt.space, "space tag")->required();
    orbit->add_option("--point", point_str, "point x,y,z the orbit passes through");
    orbit->add_option("--v-lo", v_lo, "lower group parameter");
    orbit->add_option("--v-hi", v_hi, "upper group parameter");
    orbit->add_option("--samples", curve_samples, "number of samples");
    orbit->add_option("--out", out_path, "output file (default stdout)");

    auto* lift = app.add_subcommand(
        "lift", "export a horizontal lift of a quotient curve as s,x,y,z CSV");
    lift->add_option("--curve", curve_spec,
                     "funnel | line:xi1_0,xi1_slope,xi2_0,xi2_slope");
    lift->add_option("--b", lift_b, "group parameter b of the G34 action");
    lift->add_option("--init", init_str, "lift point x,y,z at s-lo");
    lift->add_option("--s-lo", s_lo, "curve parameter start");
    lift->add_option("--s-hi", s_hi, "curve parameter end");
    lift->add_option("--samples", curve_samples, "number of samples");
    lift->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // flag misuse is a config error
    }

    try {
        if (trace->parsed())
            return cmd_trace(popt, lopt, length, ctrl, format, out_path);
        if (quad->parsed())
            return cmd_quadrature(popt, lopt, u_end, sign, qtol, grid, format, out_path);
        if (orbit->parsed())
            return cmd_orbit(popt.space, point_str, v_lo, v_hi, curve_samples, out_path);
        if (lift->parsed())
            return cmd_lift(curve_spec, lift_b, init_str, s_lo, s_hi, curve_samples,
                            out_path);
        return cmd_check(suite, popt.space, popt.fixture, out_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
