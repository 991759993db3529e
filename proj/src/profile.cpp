#include "invgeo/profile.hpp"

#include <cmath>
#include <memory>

namespace invgeo {

ScalarProfile ScalarProfile::finite_difference(Fn1 f, Interval domain, double step_base) {
    ScalarProfile p;
    auto fn = std::make_shared<Fn1>(std::move(f));
    p.eval_ = [fn](double u) { return (*fn)(u); };
    p.deriv_ = [fn, domain, step_base](double u) {
        return fd::deriv(*fn, u, fd::default_step(u, step_base), domain);
    };
    p.deriv2_ = [fn, domain, step_base](double u) {
        return fd::deriv2(*fn, u, fd::default_step(u, step_base), domain);
    };
    p.provenance_ = Provenance::FiniteDifference;
    p.step_base_ = step_base;
    return p;
}

ScalarProfile ScalarProfile::sqrt_of(Fn1 W, Fn1 dW, Fn1 d2W) {
    auto w = std::make_shared<Fn1>(std::move(W));
    auto dw = std::make_shared<Fn1>(std::move(dW));
    auto d2w = std::make_shared<Fn1>(std::move(d2W));
    return analytic(
        [w](double u) { return std::sqrt((*w)(u)); },
        [w, dw](double u) { return (*dw)(u) / (2.0 * std::sqrt((*w)(u))); },
        [w, dw, d2w](double u) {
            const double W0 = (*w)(u);
            const double W1 = (*dw)(u);
            const double W2 = (*d2w)(u);
            const double s = std::sqrt(W0);
            return W2 / (2.0 * s) - W1 * W1 / (4.0 * W0 * s);
        });
}

namespace {

// Midpoint grid strictly inside the (possibly clipped) domain.
std::vector<double> sample_grid(const Interval& dom, int samples) {
    const Interval w = dom.sampling_window();
    std::vector<double> us(static_cast<std::size_t>(samples));
    const double step = w.width() / samples;
    for (int i = 0; i < samples; ++i)
        us[static_cast<std::size_t>(i)] = w.lo + (i + 0.5) * step;
    return us;
}

} // namespace

Report validate_metric_identity(const MetricProfile& p, int samples, double tol) {
    if (samples < 2)
        throw Error("validate_metric_identity: samples must be >= 2");
    if (!(tol > 0))
        throw Error("validate_metric_identity: tol must be positive");
    if (!(p.domain().lo < p.domain().hi))
        throw InvalidDomain("empty profile domain");
    Report rep;
    for (double u : sample_grid(p.domain(), samples)) {
        const double w = p.omega()(u);
        if (!(w > 0))
            throw NonpositiveOmega("omega <= 0 at u = " + std::to_string(u));
        const double r = std::abs(p.E()(u) * w * w - p.F()(u) * p.F()(u) - w * w);
        rep.max_residual = std::max(rep.max_residual, r);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

double gauss_curvature(const MetricProfile& p, double u) {
    if (!p.domain().contains(u))
        throw OutOfDomain("gauss_curvature: u outside profile domain");
    const double w = p.omega()(u);
    if (!(w > 0))
        throw NonpositiveOmega("gauss_curvature: omega <= 0");
    return -p.omega().deriv2(u) / w;
}

Report verify_constant_curvature(const MetricProfile& p, double K, int samples, double tol) {
    if (samples < 2)
        throw Error("verify_constant_curvature: samples must be >= 2");
    if (!(p.domain().lo < p.domain().hi))
        throw InvalidDomain("empty profile domain");
    Report rep;
    for (double u : sample_grid(p.domain(), samples)) {
        const double w = p.omega()(u);
        if (!(w > 0))
            throw NonpositiveOmega("omega <= 0 at u = " + std::to_string(u));
        const double r = std::abs(p.omega().deriv2(u) + K * w);
        rep.max_residual = std::max(rep.max_residual, r);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

} // namespace invgeo
