#include "invgeo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace invgeo {

namespace fd {

double default_step(double u, double base) {
    return std::max(base, 1e-7 * std::abs(u));
}

namespace {

// Room to each boundary; infinite domains give infinite room.
struct Room {
    double lo, hi;
};

Room room(double u, const Interval& dom) {
    return {u - dom.lo, dom.hi - u};
}

} // namespace

double deriv(const Fn1& f, double u, double h, const Interval& dom) {
    const Room r = room(u, dom);
    if (h < r.lo && h < r.hi)
        return (f(u + h) - f(u - h)) / (2 * h);
    if (r.hi >= r.lo) { // forward
        const double s = std::min(h, r.hi / 2.5);
        return (-3 * f(u) + 4 * f(u + s) - f(u + 2 * s)) / (2 * s);
    }
    const double s = std::min(h, r.lo / 2.5);
    return (3 * f(u) - 4 * f(u - s) + f(u - 2 * s)) / (2 * s);
}

double deriv2(const Fn1& f, double u, double h, const Interval& dom) {
    const Room r = room(u, dom);
    if (h < r.lo && h < r.hi)
        return (f(u + h) - 2 * f(u) + f(u - h)) / (h * h);
    if (r.hi >= r.lo) { // forward, second order
        const double s = std::min(h, r.hi / 3.5);
        return (2 * f(u) - 5 * f(u + s) + 4 * f(u + 2 * s) - f(u + 3 * s)) / (s * s);
    }
    const double s = std::min(h, r.lo / 3.5);
    return (2 * f(u) - 5 * f(u - s) + 4 * f(u - 2 * s) - f(u - 3 * s)) / (s * s);
}

} // namespace fd

double bisect(const Fn1& f, double a, double b, double tol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0)
        return a;
    if (fb == 0)
        return b;
    if ((fa < 0) == (fb < 0))
        throw Error("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0)
            return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double minimize(const Fn1& f, double a, double b, double tol, int max_iter) {
    static const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Fn1& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double res_k = kWgk[7] * fc;
    double res_g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        res_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            res_g += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, res_k * h, std::abs((res_k - res_g) * h)};
}

} // namespace

QuadResult integrate(const Fn1& f, double a, double b, double abs_tol,
                     double rel_tol, int max_subdiv) {
    if (a == b)
        return {0.0, 0.0};
    std::priority_queue<Segment> queue;
    Segment s0 = gk15(f, a, b);
    double total = s0.value, err = s0.error;
    queue.push(s0);
    int splits = 0;
    while (err > std::max(abs_tol, rel_tol * std::abs(total)) &&
           splits < max_subdiv) {
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            if (!std::isfinite(worst.value))
                throw Error("integrate: non-integrable singularity");
            queue.push({worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++splits;
    }
    if (!std::isfinite(total))
        throw Error("integrate: integrand produced non-finite values");
    return {total, err};
}

QuadResult integrate_sqrt_singular(const Fn1& f, double a, double b,
                                   double singular_end, double delta,
                                   double abs_tol) {
    if (a == b)
        return {0.0, 0.0};
    if (singular_end != a && singular_end != b)
        throw Error("integrate_sqrt_singular: singular point must be an endpoint");
    const double dir = (b > a) ? 1.0 : -1.0;
    const double len = std::abs(b - a);
    const double d = std::min(std::max(delta, 0.0), 0.5 * len);
    if (d <= 0)
        return integrate(f, a, b, abs_tol);

    QuadResult regular{0.0, 0.0};
    QuadResult sub;
    const double t_max = std::sqrt(d);
    if (singular_end == b) {
        const double b_in = b - dir * d;
        if (b_in != a)
            regular = integrate(f, a, b_in, 0.5 * abs_tol);
        // u = b - dir*t^2 walks from b_in (t = sqrt(d)) into the endpoint.
        auto g = [&](double t) { return 2.0 * dir * t * f(b - dir * t * t); };
        sub = integrate(g, t_max, 0.0, 0.5 * abs_tol);
        sub.value = -sub.value; // orient as contribution from b_in to b
    } else {
        const double a_in = a + dir * d;
        auto g = [&](double t) { return 2.0 * dir * t * f(a + dir * t * t); };
        sub = integrate(g, 0.0, t_max, 0.5 * abs_tol);
        if (a_in != b)
            regular = integrate(f, a_in, b, 0.5 * abs_tol);
    }
    return {regular.value + sub.value, regular.error_estimate + sub.error_estimate};
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw Error("CubicSpline: need >= 2 nodes with matching values");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw Error("CubicSpline: abscissae must be strictly increasing");
    m_.assign(n, 0.0);
    if (n == 2)
        return;
    // Thomas solve for interior second derivatives, natural end conditions.
    std::vector<double> diag(n, 2.0), rhs(n, 0.0), upper(n, 0.0);
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        h[i] = x_[i + 1] - x_[i];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        diag[i] = 2.0 * (h[i - 1] + h[i]);
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
        upper[i] = h[i];
    }
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double w = h[i - 1] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
        if (i == 1)
            break;
    }
}

std::size_t CubicSpline::segment(double u) const {
    if (u <= x_.front())
        return 0;
    if (u >= x_.back())
        return x_.size() - 2;
    auto it = std::upper_bound(x_.begin(), x_.end(), u);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSpline::operator()(double u) const {
    const std::size_t i = segment(u);
    const double h = x_[i + 1] - x_[i];
    const double t = u - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2 * m_[i] + m_[i + 1]) / 6.0;
    const double c = m_[i] / 2.0;
    const double d = (m_[i + 1] - m_[i]) / (6.0 * h);
    return y_[i] + t * (b + t * (c + t * d));
}

double CubicSpline::deriv(double u) const {
    const std::size_t i = segment(u);
    const double h = x_[i + 1] - x_[i];
    const double t = u - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2 * m_[i] + m_[i + 1]) / 6.0;
    const double c = m_[i] / 2.0;
    const double d = (m_[i + 1] - m_[i]) / (6.0 * h);
    return b + t * (2 * c + 3 * d * t);
}

double CubicSpline::deriv2(double u) const {
    const std::size_t i = segment(u);
    const double h = x_[i + 1] - x_[i];
    const double t = u - x_[i];
    return m_[i] + (m_[i + 1] - m_[i]) * t / h;
}

} // namespace invgeo
