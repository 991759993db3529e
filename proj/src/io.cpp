#include "invgeo/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "invgeo/spaces.hpp"

namespace invgeo {

using nlohmann::json;

namespace {

double param(const ProfileDescription& d, const std::string& key) {
    auto it = d.params.find(key);
    if (it == d.params.end())
        throw Error("profile description misses parameter '" + key + "'");
    return it->second;
}

double param_or(const ProfileDescription& d, const std::string& key, double fallback) {
    auto it = d.params.find(key);
    return it == d.params.end() ? fallback : it->second;
}

MetricProfile clip_domain(const MetricProfile& p, const ProfileDescription& d) {
    if (!d.has_domain)
        return p;
    const Interval dom(std::max(d.domain.lo, p.domain().lo),
                       std::min(d.domain.hi, p.domain().hi));
    return MetricProfile(dom, p.E(), p.F(), p.omega());
}

} // namespace

MetricProfile build_profile(const ProfileDescription& desc) {
    if (desc.kind == "tabulated") {
        if (desc.u.size() < 2 || desc.omega.size() != desc.u.size())
            throw Error("tabulated profile needs matching u and omega columns");
        auto spline_profile = [&](const std::vector<double>& col,
                                  double fallback) -> ScalarProfile {
            if (col.empty())
                return ScalarProfile::constant(fallback);
            if (col.size() != desc.u.size())
                throw Error("tabulated column length mismatch");
            auto sp = std::make_shared<CubicSpline>(desc.u, col);
            return ScalarProfile::analytic([sp](double x) { return (*sp)(x); },
                                           [sp](double x) { return sp->deriv(x); },
                                           [sp](double x) { return sp->deriv2(x); });
        };
        Interval dom(desc.u.front(), desc.u.back());
        if (desc.has_domain)
            dom = Interval(std::max(dom.lo, desc.domain.lo),
                           std::min(dom.hi, desc.domain.hi));
        return MetricProfile(dom, spline_profile(desc.E, 1.0), spline_profile(desc.F, 0.0),
                             spline_profile(desc.omega, 1.0));
    }
    if (desc.kind != "analytic")
        throw Error("profile kind must be 'analytic' or 'tabulated'");

    const std::string& fam = desc.family;
    if (fam == "funnel")
        return clip_domain(funnel_profile(), desc);
    if (fam == "g34")
        return clip_domain(g34_profile(param(desc, "b")), desc);
    if (fam == "catenoid")
        return clip_domain(catenoid_profile(), desc);
    if (fam == "g24")
        return clip_domain(g24_profile(param(desc, "a"), param(desc, "b")), desc);
    if (fam == "g24-slanted")
        return clip_domain(g24_slanted_profile(param(desc, "a"), param(desc, "b")), desc);
    if (fam == "g14")
        return clip_domain(g14_profile(param(desc, "b")), desc);
    if (fam == "bcv")
        return clip_domain(bcv_profile(param(desc, "ell"), param(desc, "m")), desc);
    if (fam == "constant-curvature") {
        const auto sol = solve_omega(param(desc, "K"), param(desc, "omega0"),
                                     param_or(desc, "domega0", 0.0));
        return clip_domain(sol.profile(), desc);
    }
    if (fam == "linear") {
        const auto sol = solve_omega(0.0, param(desc, "omega0"), param(desc, "slope"));
        return clip_domain(sol.profile(), desc);
    }
    if (fam == "constant") {
        const auto sol = solve_omega(0.0, param(desc, "omega0"), 0.0);
        return clip_domain(sol.profile(), desc);
    }
    throw Error("unknown analytic profile family '" + fam + "'");
}

ProfileDescription profile_description_from_json(const json& j) {
    ProfileDescription d;
    d.kind = j.at("kind").get<std::string>();
    if (j.contains("domain")) {
        d.has_domain = true;
        const auto& dom = j.at("domain");
        d.domain = Interval(dom.value("lo", -std::numeric_limits<double>::infinity()),
                            dom.value("hi", std::numeric_limits<double>::infinity()));
    }
    if (d.kind == "analytic") {
        d.family = j.at("family").get<std::string>();
        if (j.contains("params"))
            for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
                d.params[it.key()] = it.value().get<double>();
    } else {
        d.u = j.at("u").get<std::vector<double>>();
        d.omega = j.at("omega").get<std::vector<double>>();
        if (j.contains("E"))
            d.E = j.at("E").get<std::vector<double>>();
        if (j.contains("F"))
            d.F = j.at("F").get<std::vector<double>>();
    }
    return d;
}

json to_json(const ProfileDescription& d) {
    json j;
    j["kind"] = d.kind;
    if (d.has_domain)
        j["domain"] = {{"lo", d.domain.lo}, {"hi", d.domain.hi}};
    if (d.kind == "analytic") {
        j["family"] = d.family;
        if (!d.params.empty())
            j["params"] = d.params;
    } else {
        j["u"] = d.u;
        j["omega"] = d.omega;
        if (!d.E.empty())
            j["E"] = d.E;
        if (!d.F.empty())
            j["F"] = d.F;
    }
    return j;
}

ProfileDescription tabulate_profile(const MetricProfile& p, int samples) {
    if (samples < 4)
        throw Error("tabulate_profile: need at least 4 samples");
    ProfileDescription d;
    d.kind = "tabulated";
    const Interval w = p.domain().sampling_window();
    d.has_domain = true;
    d.domain = w;
    for (int i = 0; i < samples; ++i) {
        const double u = w.lo + w.width() * (i + 0.5) / samples;
        d.u.push_back(u);
        d.omega.push_back(p.omega()(u));
        d.E.push_back(p.E()(u));
        d.F.push_back(p.F()(u));
    }
    return d;
}

namespace {

// CSV profile: header u,omega[,E[,F]] followed by one row per grid point.
ProfileDescription profile_from_csv(std::istream& in) {
    ProfileDescription d;
    d.kind = "tabulated";
    std::string line;
    if (!std::getline(in, line))
        throw Error("empty profile CSV");
    std::vector<std::string> cols;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cols.push_back(cell);
    }
    if (cols.size() < 2 || cols[0] != "u" || cols[1] != "omega")
        throw Error("profile CSV header must start with u,omega");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        if (row.size() != cols.size())
            throw Error("profile CSV row width does not match the header");
        d.u.push_back(row[0]);
        d.omega.push_back(row[1]);
        if (cols.size() > 2)
            d.E.push_back(row[2]);
        if (cols.size() > 3)
            d.F.push_back(row[3]);
    }
    return d;
}

} // namespace

ProfileDescription load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open profile file '" + path + "'");
    if (in.peek() == 'u')
        return profile_from_csv(in);
    json j;
    in >> j;
    return profile_description_from_json(j);
}

void write_path_csv(std::ostream& os, const MetricProfile& p, const GeodesicPath& path) {
    os << "s,u,v,du,dv,omega,theta,slant_residual,speed_residual\n";
    os << std::setprecision(17);
    const double c = path.slant.c;
    for (const auto& st : path.states) {
        const double w = p.omega()(st.u);
        const double E = p.E()(st.u), F = p.F()(st.u);
        const double slant_res = std::abs(F * st.du + w * w * st.dv - c);
        const double speed_res = std::abs(E * st.du * st.du + 2 * F * st.du * st.dv +
                                          w * w * st.dv * st.dv - 1.0);
        os << st.s << ',' << st.u << ',' << st.v << ',' << st.du << ',' << st.dv << ','
           << w << ',' << angle_with_orbit(p, st) << ',' << slant_res << ','
           << speed_res << '\n';
    }
}

PathCsv read_path_csv(std::istream& is) {
    PathCsv out;
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        if (row.size() != 9)
            throw Error("path CSV rows must have 9 columns");
        out.states.push_back({row[0], row[1], row[2], row[3], row[4]});
        out.omega.push_back(row[5]);
        out.theta.push_back(row[6]);
        out.slant_residual.push_back(row[7]);
        out.speed_residual.push_back(row[8]);
    }
    return out;
}

json path_to_json(const MetricProfile& p, const GeodesicPath& path) {
    json states = json::array();
    for (const auto& st : path.states)
        states.push_back({{"s", st.s},
                          {"u", st.u},
                          {"v", st.v},
                          {"du", st.du},
                          {"dv", st.dv},
                          {"omega", p.omega()(st.u)}});
    return {{"slant", path.slant.c},
            {"status", path.status == PathStatus::Completed ? "completed" : "domain-exit"},
            {"diagnostics",
             {{"max_speed_drift", path.diagnostics.max_speed_drift},
              {"max_slant_drift", path.diagnostics.max_slant_drift},
              {"turning_points", path.diagnostics.turning_points}}},
            {"states", states}};
}

void write_quadrature_csv(std::ostream& os, const QuadratureResult& q) {
    os << "u,v\n" << std::setprecision(17);
    for (std::size_t i = 0; i < q.u_grid.size(); ++i)
        os << q.u_grid[i] << ',' << q.v_values[i] << '\n';
}

json quadrature_to_json(const QuadratureResult& q) {
    return {{"u", q.u_grid},
            {"v", q.v_values},
            {"branch_sign", q.branch_sign},
            {"estimated_error", q.estimated_error}};
}

void write_curve_csv(std::ostream& os,
                     const std::function<AmbientPoint(double)>& curve, double lo,
                     double hi, int samples) {
    if (samples < 2)
        throw Error("write_curve_csv: need at least 2 samples");
    os << "s,x,y,z\n" << std::setprecision(17);
    for (int i = 0; i < samples; ++i) {
        const double s = lo + (hi - lo) * i / (samples - 1);
        const auto p = curve(s);
        os << s << ',' << p.x << ',' << p.y << ',' << p.z << '\n';
    }
}

json to_json(const ClosedFormFamily& fam) {
    const char* kase = fam.curvature_case == CurvatureCase::Positive ? "positive"
                       : fam.curvature_case == CurvatureCase::Negative ? "negative"
                                                                        : "flat";
    return {{"case", kase}, {"R", fam.R}, {"a", fam.a}, {"b", fam.b}, {"c", fam.c}};
}

ClosedFormFamily closed_form_family_from_json(const json& j) {
    const std::string kase = j.at("case").get<std::string>();
    const double R = j.value("R", 1.0);
    const double a = j.at("a").get<double>();
    const double b = j.value("b", 0.0);
    const double c = j.at("c").get<double>();
    if (kase == "positive")
        return ClosedFormFamily::positive(R, a, c, b);
    if (kase == "negative")
        return ClosedFormFamily::negative(R, a, c, b);
    if (kase == "flat")
        return ClosedFormFamily::flat(a, c, b);
    throw Error("unknown curvature case '" + kase + "'");
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace {

struct Box {
    double xmin, xmax, ymin, ymax;
};

Box bounds(const std::vector<SvgSeries>& series) {
    Box b{0, 1, 0, 1};
    bool first = true;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y))
                continue;
            if (first) {
                b = {x, x, y, y};
                first = false;
            } else {
                b.xmin = std::min(b.xmin, x);
                b.xmax = std::max(b.xmax, x);
                b.ymin = std::min(b.ymin, y);
                b.ymax = std::max(b.ymax, y);
            }
        }
    if (b.xmax - b.xmin < 1e-12) {
        b.xmin -= 0.5;
        b.xmax += 0.5;
    }
    if (b.ymax - b.ymin < 1e-12) {
        b.ymin -= 0.5;
        b.ymax += 0.5;
    }
    return b;
}

std::string fmt_tick(double v) {
    std::ostringstream os;
    os << std::setprecision(4) << v;
    return os.str();
}

} // namespace

void write_svg(std::ostream& os, const std::vector<SvgPanel>& panels) {
    const int pw = 420, ph = 360, margin = 56;
    const int width = pw * static_cast<int>(panels.size());
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << ph << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    int ox = 0;
    static const char* fallback_colors[] = {"#1f6fb2", "#d1495b", "#66a182",
                                            "#edae49", "#775a92", "#333333"};
    for (const auto& panel : panels) {
        const Box b = bounds(panel.series);
        const double x0 = ox + margin, x1 = ox + pw - 16;
        const double y0 = ph - margin, y1 = 28;
        auto sx = [&](double x) {
            return x0 + (x - b.xmin) / (b.xmax - b.xmin) * (x1 - x0);
        };
        auto sy = [&](double y) {
            return y0 + (y - b.ymin) / (b.ymax - b.ymin) * (y1 - y0);
        };
        os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << (x1 - x0)
           << "\" height=\"" << (y0 - y1)
           << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
        for (int t = 0; t <= 4; ++t) {
            const double fx = b.xmin + (b.xmax - b.xmin) * t / 4;
            const double fy = b.ymin + (b.ymax - b.ymin) * t / 4;
            os << "<line x1=\"" << sx(fx) << "\" y1=\"" << y0 << "\" x2=\"" << sx(fx)
               << "\" y2=\"" << y0 + 4 << "\" stroke=\"#888\"/>\n";
            os << "<text x=\"" << sx(fx) << "\" y=\"" << y0 + 16
               << "\" text-anchor=\"middle\">" << fmt_tick(fx) << "</text>\n";
            os << "<line x1=\"" << x0 - 4 << "\" y1=\"" << sy(fy) << "\" x2=\"" << x0
               << "\" y2=\"" << sy(fy) << "\" stroke=\"#888\"/>\n";
            os << "<text x=\"" << x0 - 6 << "\" y=\"" << sy(fy) + 4
               << "\" text-anchor=\"end\">" << fmt_tick(fy) << "</text>\n";
        }
        os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << ph - 12
           << "\" text-anchor=\"middle\">" << panel.xlabel << "</text>\n";
        os << "<text x=\"" << ox + 14 << "\" y=\"" << (y0 + y1) / 2
           << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << ox + 14 << " "
           << (y0 + y1) / 2 << ")\">" << panel.ylabel << "</text>\n";
        os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"16\" text-anchor=\"middle\" "
              "font-size=\"13\">" << panel.title << "</text>\n";
        int si = 0;
        for (const auto& s : panel.series) {
            const std::string color =
                s.color.empty() ? fallback_colors[si % 6] : s.color;
            os << "<polyline fill=\"none\" stroke=\"" << color
               << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& [x, y] : s.points)
                if (std::isfinite(x) && std::isfinite(y))
                    os << sx(x) << ',' << sy(y) << ' ';
            os << "\"/>\n";
            if (!s.label.empty())
                os << "<text x=\"" << x1 - 6 << "\" y=\"" << y1 + 14 + 14 * si
                   << "\" text-anchor=\"end\" fill=\"" << color << "\">" << s.label
                   << "</text>\n";
            ++si;
        }
        ox += pw;
    }
    os << "</svg>\n";
}

} // namespace invgeo
