#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "toric/jet.hpp"

namespace toric {

// Central-difference estimate of a full third-order jet from point values
// only. This is the anti-hallucination instrument: it knows nothing about
// jet arithmetic and cross-checks every analytic formula in the toolkit.
//
// h drives the first/second-order stencils, h3 the third-order ones; the
// third-order stencils amplify roundoff, so they get a coarser default.
// The stencil stays within radius 2·max(h, h3) of the point.
inline Jet2 fd_jet(const std::function<double(double, double)>& f, double x,
                   double y, double h = 1e-4, double h3 = 1e-3) {
    Jet2 r;
    r.value = f(x, y);

    r.d10 = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
    r.d01 = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
    r.d20 = (f(x + h, y) - 2.0 * r.value + f(x - h, y)) / (h * h);
    r.d02 = (f(x, y + h) - 2.0 * r.value + f(x, y - h)) / (h * h);
    r.d11 = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) +
             f(x - h, y - h)) /
            (4.0 * h * h);

    const double c3 = 2.0 * h3 * h3 * h3;
    r.d30 = (f(x + 2.0 * h3, y) - 2.0 * f(x + h3, y) + 2.0 * f(x - h3, y) -
             f(x - 2.0 * h3, y)) /
            c3;
    r.d03 = (f(x, y + 2.0 * h3) - 2.0 * f(x, y + h3) + 2.0 * f(x, y - h3) -
             f(x, y - 2.0 * h3)) /
            c3;
    // ∂y applied to the second-x-difference, and symmetrically.
    r.d21 = ((f(x + h3, y + h3) - 2.0 * f(x, y + h3) + f(x - h3, y + h3)) -
             (f(x + h3, y - h3) - 2.0 * f(x, y - h3) + f(x - h3, y - h3))) /
            c3;
    r.d12 = ((f(x + h3, y + h3) - 2.0 * f(x + h3, y) + f(x + h3, y - h3)) -
             (f(x - h3, y + h3) - 2.0 * f(x - h3, y) + f(x - h3, y - h3))) /
            c3;
    return r;
}

// Worst relative disagreement between an analytic jet and an FD jet,
// split by derivative order (third-order stencils are inherently noisier).
// Relative means |a − b| / max(1, |a|, |b|).
struct FdAgreement {
    double worst_low = 0.0;   // value and first/second partials
    double worst_high = 0.0;  // third partials
};

inline FdAgreement fd_compare(const Jet2& ad, const Jet2& fd) {
    auto rel = [](double a, double b) {
        return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    };
    FdAgreement out;
    for (auto [a, b] : {std::pair{ad.value, fd.value},
                        {ad.d10, fd.d10},
                        {ad.d01, fd.d01},
                        {ad.d20, fd.d20},
                        {ad.d11, fd.d11},
                        {ad.d02, fd.d02}}) {
        out.worst_low = std::max(out.worst_low, rel(a, b));
    }
    for (auto [a, b] : {std::pair{ad.d30, fd.d30},
                        {ad.d21, fd.d21},
                        {ad.d12, fd.d12},
                        {ad.d03, fd.d03}}) {
        out.worst_high = std::max(out.worst_high, rel(a, b));
    }
    return out;
}

}  // namespace toric
