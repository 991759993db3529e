#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "invgeo/errors.hpp"

namespace invgeo {

/// Open interval (lo, hi) of the profile parameter. Either side may be
/// infinite.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi))
            throw InvalidDomain("interval requires lo < hi");
    }

    static Interval all() { return Interval(); }

    bool contains(double u) const { return u > lo && u < hi; }
    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
    double width() const { return hi - lo; }

    /// Finite window used when sampling: unbounded sides are replaced by
    /// +-halfwidth (shifted if the finite side lies beyond it).
    Interval sampling_window(double halfwidth = 10.0) const {
        double a = lo, b = hi;
        if (!std::isfinite(a))
            a = std::isfinite(b) ? std::min(-halfwidth, b - 2 * halfwidth) : -halfwidth;
        if (!std::isfinite(b))
            b = std::isfinite(lo) ? std::max(halfwidth, lo + 2 * halfwidth) : halfwidth;
        return Interval(a, b);
    }
};

} // namespace invgeo
