#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace arcstar {

/// Adaptive Simpson quadrature with absolute tolerance, for smooth
/// integrands on a finite interval.  Works for real- or complex-valued f.
namespace detail {

template <typename F, typename V>
V simpson_step(const F& f, double a, double b, V fa, V fm, V fb, V whole,
               double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const V flm = f(lm), frm = f(rm);
    const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const V delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
auto integrate(const F& f, double a, double b, double abs_tol = 1e-12,
               int max_depth = 50) -> decltype(f(a)) {
    using V = decltype(f(a));
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    const V fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace arcstar
