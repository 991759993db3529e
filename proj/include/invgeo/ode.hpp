#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>

#include "invgeo/errors.hpp"

namespace invgeo {

/// Adaptive embedded Dormand-Prince 5(4) Runge-Kutta integrator.
///
/// Trial states can additionally be constrained by an `admissible`
/// predicate; when the step size collapses against such a constraint the
/// driver stops at the last accepted state (Status::Blocked) instead of
/// throwing. A step-size underflow caused by error control alone throws
/// IntegratorStall.
template <int N>
class Rk45 {
public:
    using State = std::array<double, N>;
    using Rhs = std::function<void(double, const State&, State&)>;
    using StepCallback =
        std::function<bool(double t_prev, const State& y_prev, double t, const State& y)>;

    struct Options {
        double abs_tol = 1e-10;
        double rel_tol = 1e-10;
        double max_step = 0.1;
        double initial_step = 0.0; // 0 -> heuristic
        long max_steps = 50'000'000;
        std::function<bool(const State&)> admissible;
    };

    enum class Status { Reached, Stopped, Blocked };

    struct Result {
        Status status;
        double t;
        State y;
        long steps = 0;
    };

    /// Integrates from (t0, y0) toward t_end (either direction). `on_step`
    /// runs after every accepted step and may return false to stop.
    static Result integrate(const Rhs& rhs, double t0, State y0, double t_end,
                            const Options& opt, const StepCallback& on_step = {}) {
        const double dir = (t_end >= t0) ? 1.0 : -1.0;
        double t = t0;
        State y = y0;
        double h = opt.initial_step > 0
                       ? opt.initial_step
                       : std::min(opt.max_step, std::max(1e-6, 1e-3 * std::abs(t_end - t0)));
        h = std::min(h, std::abs(t_end - t0));
        long steps = 0;
        int consecutive_shrinks = 0;

        State k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
        while (dir * (t_end - t) > 0) {
            h = std::min(h, opt.max_step);
            h = std::min(h, std::abs(t_end - t));
            const double floor = step_floor(t);
            if (h < floor)
                throw IntegratorStall("step size underflow");
            if (++steps > opt.max_steps)
                throw IntegratorStall("step budget exhausted");

            const double hs = dir * h;
            rhs(t, y, k1);
            combine(y, ytmp, hs, {a21}, {&k1});
            rhs(t + c2 * hs, ytmp, k2);
            combine(y, ytmp, hs, {a31, a32}, {&k1, &k2});
            rhs(t + c3 * hs, ytmp, k3);
            combine(y, ytmp, hs, {a41, a42, a43}, {&k1, &k2, &k3});
            rhs(t + c4 * hs, ytmp, k4);
            combine(y, ytmp, hs, {a51, a52, a53, a54}, {&k1, &k2, &k3, &k4});
            rhs(t + c5 * hs, ytmp, k5);
            combine(y, ytmp, hs, {a61, a62, a63, a64, a65}, {&k1, &k2, &k3, &k4, &k5});
            rhs(t + hs, ytmp, k6);
            combine(y, ynew, hs, {a71, 0.0, a73, a74, a75, a76},
                    {&k1, &k2, &k3, &k4, &k5, &k6});
            rhs(t + hs, ynew, k7);

            // embedded 4th-order error estimate
            double err = 0.0;
            bool finite = true;
            for (int i = 0; i < N; ++i) {
                const double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                       e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                err += (e / sc) * (e / sc);
                finite = finite && std::isfinite(ynew[i]) && std::isfinite(e);
            }
            err = std::sqrt(err / N);

            if (!finite) {
                h *= 0.1;
                if (excessive(++consecutive_shrinks))
                    throw IntegratorStall("repeated non-finite trial states");
                continue;
            }
            if (err > 1.0) {
                h *= std::max(0.1, 0.9 * std::pow(err, -0.2));
                if (excessive(++consecutive_shrinks))
                    throw IntegratorStall("error control cannot make progress");
                continue;
            }
            if (opt.admissible && !opt.admissible(ynew)) {
                if (h <= 4.0 * floor)
                    return {Status::Blocked, t, y, steps};
                h *= 0.5;
                consecutive_shrinks = 0;
                continue;
            }

            consecutive_shrinks = 0;
            const double t_new = t + hs;
            if (on_step && !on_step(t, y, t_new, ynew))
                return {Status::Stopped, t_new, ynew, steps};
            t = t_new;
            y = ynew;
            h *= std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        }
        return {Status::Reached, t, y, steps};
    }

private:
    static double step_floor(double t) { return 1e-14 * std::max(1.0, std::abs(t)); }
    static bool excessive(int shrinks) { return shrinks > 200; }

    static void combine(const State& y, State& out, double hs,
                        std::initializer_list<double> coeffs,
                        std::initializer_list<const State*> ks) {
        for (int i = 0; i < N; ++i) {
            double acc = 0.0;
            auto c = coeffs.begin();
            auto k = ks.begin();
            for (; c != coeffs.end(); ++c, ++k)
                acc += (*c) * (**k)[i];
            out[i] = y[i] + hs * acc;
        }
    }

    // Dormand-Prince coefficients
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                            a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    // difference between 5th- and 4th-order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

} // namespace invgeo
