#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace arcstar {

/// Bisection for h(r) = target on [lo, hi].  Requires a sign change of
/// h - target across the bracket; runs until the interval is below
/// 1e-13 and returns its midpoint.  Bisection is preferred over
/// derivative-based methods: the transcendental equations solved here
/// can be nearly flat across the bracket.
template <typename F>
double solve_monotone(const F& h, double target, double lo, double hi,
                      double interval_tol = 1e-13) {
    double flo = h(lo) - target;
    double fhi = h(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("solve_monotone: no sign change across bracket");
    while (hi - lo > interval_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // hit double resolution
        const double fm = h(mid) - target;
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Golden-section maximizer on [a, b] for a unimodal objective; returns
/// (argmax, max).  Tolerance is on the bracket width.
template <typename F>
std::pair<double, double> golden_max(const F& f, double a, double b,
                                     double x_tol = 1e-12, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace arcstar
