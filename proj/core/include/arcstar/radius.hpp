#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arcstar/classes.hpp"

namespace arcstar {

/// Where a sharp radius makes boundary contact: the extremal's
/// log-derivative, the point +-r* on the real axis where it touches,
/// and the real boundary value it must equal there.
struct SharpWitness {
    std::string function_label;
    double contact_z = 0.0;
    double boundary_value = 0.0;
    std::function<std::complex<double>(std::complex<double>)> logderiv;
};

/// One entry of the radius catalog.  `deviation` is the radial deviation
/// whose crossing of `limit` defines the radius, so the defining equation
/// is deviation(r) = limit and `residual` is its absolute value at the
/// numeric root.
struct RadiusResult {
    std::string name;
    std::optional<double> closed_form;
    double numeric = 0.0;
    double residual = 0.0;
    std::function<double(double)> deviation;
    double limit = 0.0;
    SharpWitness witness;
};

/// Largest r such that every member of the comparison class, restricted
/// to |z| < r, lands in the strip class: solves radial_deviation(r) = pi/4.
/// Defined for {lemniscate, cardioid, exponential, crescent, wp}.
RadiusResult tau_radius_of(Family cls);

/// Largest r such that every member of the strip class, restricted to
/// |z| < r, lands in the comparison class: r = tan(delta) with delta the
/// class's center-disk radius.  Defined for
/// {exponential, sigmoid, cardioid, wp, crescent}.
RadiusResult radius_in(Family cls);

/// The ten sharp radii of the two families above, in catalog order.
std::vector<RadiusResult> radius_catalog();

/// Largest radius of convexity of order gamma: least positive root of
/// (1 - arctan r)(1 - r^4)(1 - arctan r - gamma) - r = 0, 0 <= gamma < 1.
RadiusResult convexity_radius(double gamma);

/// Contact check for a sharp radius: the witness log-derivative meets the
/// boundary value at the contact point to 1e-10, stays strictly inside at
/// half the radius, and violates the bound at 1.001 times the radius.
struct ProbeReport {
    double contact_error = 0.0;   // |logderiv(contact_z) - boundary_value|
    double inside_margin = 0.0;   // limit - deviation(r*/2)          (> 0)
    double outside_excess = 0.0;  // deviation(1.001 r*) - limit      (> 0)
    bool ok = false;
};
ProbeReport sharpness_probe(const RadiusResult& result);

/// Inclusion constants of the strip class: the largest starlike order
/// alpha* = 1 - pi/4, the reciprocal-order bound 4/(4+pi), the
/// bounded-turning threshold 1 + pi/4, and the smallest k with
/// k-ST contained in the class, 1 + 4/pi.
struct InclusionConstants {
    double alpha_star;
    double reciprocal_bound;
    double m_threshold;
    double k_min0;
};
InclusionConstants inclusion_constants();

/// k-ST threshold as a function of the order alpha: (pi + 4(1-alpha))/pi.
double kst_threshold(double alpha);

/// The conic boundary {Re w = alpha + k|w-1|} for k > 1 is the ellipse
/// (x-x0)^2/a^2 + (y-y0)^2/b^2 = 1 with these parameters.
struct EllipseParams {
    double x0, y0, a, b;
};
EllipseParams kst_ellipse(double k, double alpha);

/// Whether that ellipse fits in the strip: x0 + a <= 1 + pi/4.
/// Equivalent to k >= kst_threshold(alpha).
bool ellipse_in_strip(double k, double alpha);

}  // namespace arcstar
