#pragma once

#include <span>
#include <string>
#include <utility>

#include "arcstar/power_series.hpp"
#include "arcstar/strip.hpp"

namespace arcstar {

/// A normalized analytic function f(z) = z + a_2 z^2 + ... built from a
/// Ma-Minda target, together with its logarithmic derivative z f'/f.
/// f has order one higher than logderiv so that the final product by z
/// loses nothing.
struct ExtremalFunction {
    PowerSeries f;         // a_0 = 0, a_1 = 1
    PowerSeries logderiv;  // z f'(z)/f(z), constant term 1
    std::string label;
};

/// f(z) = z exp( integral_0^z (psi(t) - 1)/t dt ) for psi - 1 given as a
/// series with zero constant term.  The log-derivative is recomputed by
/// series division and checked against 1 + (psi - 1) to 1e-11; the
/// recurrences are exact through the truncation order, so a mismatch
/// means a programming error.
ExtremalFunction build_from_psi(const PowerSeries& psi_minus_one, std::string label = {});

/// The n-th coefficient extremal member: psi - 1 = arctan(z^{n-1}),
/// so a_n = 1/(n-1) and a_k = 0 for 1 < k < n.  Requires n >= 2.
ExtremalFunction build_f_n(int n, int order);

/// Default working order for series builds.  arctan coefficients decay
/// like 1/n, so |z| <= 0.9 evaluations at this order have tails below
/// 1e-12 for the deviation checks that use them.
inline constexpr int default_series_order = 48;

/// Sharp modulus bounds (lower, upper) for class members on |z| = r:
/// (-T(-r), T(r)) with T the order-2 extremal.  Both are computed by
/// quadrature of exp(±integral_0^r arctan t / t dt) and cross-checked
/// against series evaluation to 1e-9 for r <= 0.95 (the series order is
/// raised internally; past 0.95 truncation makes the series route
/// meaningless and quadrature alone is used).
std::pair<double, double> growth_bounds(double r);

/// Radius of the disk around 0 covered by every non-rotation member:
/// exp(-integral_0^1 arctan t / t dt) = e^{-G} with G Catalan's constant.
double covering_radius();

/// max over |z| = r of |arg(T(z)/z)|, by grid scan plus golden-section
/// refinement around the best angle (ties break toward the smallest
/// angle; maxima come in conjugate pairs and either is valid).
double rotation_bound(double r, int angles = 8192);

/// Samples z f'/f on the given circles against the strip.  A necessary
/// membership check at series-truncation accuracy.
SampleReport membership_check(const ExtremalFunction& fn, std::span<const double> radii,
                              int angles = default_sample_angles);

}  // namespace arcstar
