#include "arcstar/radius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arcstar/roots.hpp"
#include "arcstar/strip.hpp"

namespace arcstar {

namespace {

constexpr double pi = std::numbers::pi;

RadiusResult make_result(std::string name, std::optional<double> closed,
                         std::function<double(double)> deviation, double limit,
                         double bracket_hi, SharpWitness witness) {
    RadiusResult res;
    res.name = std::move(name);
    res.closed_form = closed;
    res.deviation = std::move(deviation);
    res.limit = limit;
    res.numeric = solve_monotone(res.deviation, limit, 0.0, bracket_hi);
    res.residual = std::abs(res.deviation(res.numeric) - limit);
    res.witness = std::move(witness);
    return res;
}

}  // namespace

RadiusResult tau_radius_of(Family cls) {
    const ClassDescriptor& desc = comparison_class(cls);
    const double quarter_pi = pi / 4.0;

    std::optional<double> closed;
    double contact_sign = +1.0;  // all but the lemniscate touch the right wall
    switch (cls) {
        case Family::lemniscate:
            closed = pi * (8.0 - pi) / 16.0;
            contact_sign = -1.0;
            break;
        case Family::cardioid:
            closed = std::sqrt(1.0 + 3.0 * pi / 8.0) - 1.0;
            break;
        case Family::exponential:
            closed = std::log1p(quarter_pi);
            break;
        case Family::crescent:
            closed = pi * (8.0 + pi) / (8.0 * (4.0 + pi));
            break;
        case Family::wp:
            closed = std::nullopt;  // r e^r = pi/4 has no elementary closed form
            break;
        default:
            throw std::invalid_argument("tau_radius_of: no radius for this class");
    }

    SharpWitness w;
    w.function_label = desc.name + " extremal";
    w.boundary_value = 1.0 + contact_sign * quarter_pi;
    w.logderiv = desc.psi;
    auto res = make_result(desc.name + " -> S*_tau", closed, desc.radial_deviation,
                           quarter_pi, cls == Family::lemniscate ? 1.0 - 1e-12 : 1.0,
                           std::move(w));
    res.witness.contact_z = contact_sign * res.numeric;
    return res;
}

RadiusResult radius_in(Family cls) {
    switch (cls) {
        case Family::exponential:
        case Family::sigmoid:
        case Family::cardioid:
        case Family::wp:
        case Family::crescent:
            break;
        default:
            throw std::invalid_argument("radius_in: no radius for this class");
    }
    const ClassDescriptor& desc = comparison_class(cls);
    const double delta = desc.center_disk_radius;
    if (!(delta > 0.0 && delta < pi / 2.0))
        throw std::domain_error("radius_in: center-disk radius outside (0, pi/2)");

    // arctan r <= delta, so r = tan(delta); contact on the left at 1 - delta,
    // which is the class boundary point psi(-1).
    SharpWitness w;
    w.function_label = "strip-class extremal";
    w.boundary_value = 1.0 - delta;
    w.logderiv = [](std::complex<double> z) { return tau(z); };
    auto res = make_result("S*_tau -> " + desc.name, std::tan(delta),
                           [](double r) { return std::atan(r); }, delta, 0.999,
                           std::move(w));
    res.witness.contact_z = -res.numeric;
    return res;
}

std::vector<RadiusResult> radius_catalog() {
    std::vector<RadiusResult> v;
    for (Family f : {Family::lemniscate, Family::cardioid, Family::exponential,
                     Family::crescent, Family::wp})
        v.push_back(tau_radius_of(f));
    for (Family f : {Family::exponential, Family::sigmoid, Family::cardioid,
                     Family::wp, Family::crescent})
        v.push_back(radius_in(f));
    return v;
}

RadiusResult convexity_radius(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::domain_error("convexity_radius: gamma must lie in [0,1)");

    // g decreases from g(0) = 1 to -inf as r -> 1, so the bisection root
    // is the least positive one.
    const auto g = [](double r) {
        const double u = 1.0 - std::atan(r);
        return u - r / (u * (1.0 - r * r * r * r));
    };
    RadiusResult res;
    res.name = "convexity order " + std::to_string(gamma);
    res.numeric = solve_monotone(g, gamma, 0.0, 1.0 - 1e-9);
    const double u = 1.0 - std::atan(res.numeric);
    res.residual = std::abs(u * (1.0 - std::pow(res.numeric, 4)) * (u - gamma) - res.numeric);
    res.deviation = g;
    res.limit = gamma;
    return res;
}

ProbeReport sharpness_probe(const RadiusResult& result) {
    ProbeReport rep;
    const double r = result.numeric;
    if (result.witness.logderiv) {
        const std::complex<double> w = result.witness.logderiv(result.witness.contact_z);
        rep.contact_error = std::abs(w - std::complex<double>(result.witness.boundary_value));
    }
    rep.inside_margin = result.limit - result.deviation(0.5 * r);
    rep.outside_excess = result.deviation(1.001 * r) - result.limit;
    rep.ok = rep.contact_error <= 1e-10 && rep.inside_margin > 0.0 && rep.outside_excess > 0.0;
    return rep;
}

InclusionConstants inclusion_constants() {
    return {1.0 - pi / 4.0, 4.0 / (4.0 + pi), 1.0 + pi / 4.0, 1.0 + 4.0 / pi};
}

double kst_threshold(double alpha) { return (pi + 4.0 * (1.0 - alpha)) / pi; }

EllipseParams kst_ellipse(double k, double alpha) {
    if (!(k > 1.0)) throw std::domain_error("kst_ellipse: boundary is an ellipse only for k > 1");
    const double d = k * k - 1.0;
    return {(k * k - alpha) / d, 0.0, std::abs(k * (alpha - 1.0) / d),
            std::abs(alpha - 1.0) / std::sqrt(d)};
}

bool ellipse_in_strip(double k, double alpha) {
    const EllipseParams e = kst_ellipse(k, alpha);
    return e.x0 + e.a <= 1.0 + pi / 4.0;
}

}  // namespace arcstar
