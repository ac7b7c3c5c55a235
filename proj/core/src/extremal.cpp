#include "arcstar/extremal.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "arcstar/quadrature.hpp"
#include "arcstar/roots.hpp"

namespace arcstar {

namespace {

constexpr double pi = std::numbers::pi;

double arctan_over_t(double t) { return t == 0.0 ? 1.0 : std::atan(t) / t; }

// Order used for the series route of growth/rotation checks; tau~'s
// coefficients decay only like n^{-7/4} (branch points at +-i), so
// order 48 is not enough past r ~ 0.65.
constexpr int boosted_order = 320;

}  // namespace

ExtremalFunction build_from_psi(const PowerSeries& psi_minus_one, std::string label) {
    if (psi_minus_one[0] != 0.0)
        throw std::domain_error("build_from_psi: psi - 1 must vanish at 0");
    const int n = psi_minus_one.order();

    const PowerSeries expo = exp(integrate_over_t(psi_minus_one));  // f(z)/z

    PowerSeries f(n + 1);
    for (int k = 0; k <= n; ++k) f.coeff(k + 1) = expo[k];

    // z E'/E + 1 recovers z f'/f for f = z E.
    PowerSeries zEp(n);
    for (int k = 1; k <= n; ++k) zEp.coeff(k) = k * expo[k];
    PowerSeries logderiv = div(zEp, expo);
    logderiv.coeff(0) += 1.0;

    for (int k = 0; k <= n; ++k) {
        const double want = (k == 0 ? 1.0 : 0.0) + psi_minus_one[k];
        if (std::abs(logderiv[k] - want) > 1e-11)
            throw std::logic_error("build_from_psi: log-derivative round-trip failed");
    }
    return {std::move(f), std::move(logderiv), std::move(label)};
}

ExtremalFunction build_f_n(int n, int order) {
    if (n < 2) throw std::invalid_argument("build_f_n: need n >= 2");
    if (order < n - 1) throw std::invalid_argument("build_f_n: order too small for arctan(z^{n-1})");
    const PowerSeries inner = PowerSeries::monomial(order, n - 1);
    const PowerSeries psi_minus_one = compose(PowerSeries::arctan(order), inner);
    return build_from_psi(psi_minus_one, "f_" + std::to_string(n));
}

std::pair<double, double> growth_bounds(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("growth_bounds: r must lie in (0,1)");
    const double I = integrate([](double t) { return arctan_over_t(t); }, 0.0, r, 1e-12);
    const double lower = r * std::exp(-I);
    const double upper = r * std::exp(I);

    if (r <= 0.95) {
        static const ExtremalFunction tt = build_f_n(2, boosted_order);
        const double s_up = tt.f.eval(r);
        const double s_lo = -tt.f.eval(-r);
        if (std::abs(s_up - upper) > 1e-9 || std::abs(s_lo - lower) > 1e-9)
            throw std::logic_error("growth_bounds: series and quadrature routes disagree");
    }
    return {lower, upper};
}

double covering_radius() {
    const double catalan = integrate([](double t) { return arctan_over_t(t); }, 0.0, 1.0, 1e-13);
    return std::exp(-catalan);
}

double rotation_bound(double r, int angles) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("rotation_bound: r must lie in (0,1)");
    if (angles < 8) throw std::invalid_argument("rotation_bound: need angles >= 8");

    // |arg(T(z)/z)| = |Im integral_0^r arctan(s e^{i theta})/s ds|; the
    // integral is bounded by pi^2/8 < pi, so no branch wrapping occurs
    // and the series route may use atan2 directly.
    std::function<double(double)> objective;
    if (r <= 0.95) {
        static const PowerSeries expo =
            exp(integrate_over_t(PowerSeries::arctan(boosted_order)));  // T(z)/z
        objective = [r](double th) {
            const std::complex<double> w = expo.eval(std::polar(r, th));
            return std::abs(std::arg(w));
        };
    } else {
        objective = [r](double th) {
            const std::complex<double> dir = std::polar(1.0, th);
            const std::complex<double> I = integrate(
                [dir](double s) {
                    return s == 0.0 ? dir : std::atan(s * dir) / s;
                },
                0.0, r, 1e-12);
            return std::abs(I.imag());
        };
    }

    double best = 0.0;
    int best_k = 0;
    for (int k = 0; k < angles; ++k) {
        const double v = objective(2.0 * pi * k / angles);
        if (v > best) {  // strict: ties keep the smallest angle
            best = v;
            best_k = k;
        }
    }
    const double step = 2.0 * pi / angles;
    const auto [th, val] = golden_max(objective, (best_k - 1) * step, (best_k + 1) * step);
    (void)th;
    return std::max(best, val);
}

SampleReport membership_check(const ExtremalFunction& fn, std::span<const double> radii,
                              int angles) {
    return subordination_sample(fn.logderiv, radii, angles);
}

}  // namespace arcstar
