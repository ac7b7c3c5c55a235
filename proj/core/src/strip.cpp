#include "arcstar/strip.hpp"

#include <cmath>
#include <stdexcept>

namespace arcstar {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

std::complex<double> tau(std::complex<double> z) {
    if (z == std::complex<double>(0.0, 1.0) || z == std::complex<double>(0.0, -1.0))
        throw std::domain_error("tau: singular input z = +-i");
    return 1.0 + std::atan(z);
}

std::pair<double, double> re_range_on_circle(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("re_range_on_circle: r must lie in (0,1)");
    const double d = std::atan(r);
    return {1.0 - d, 1.0 + d};
}

bool StripDomain::contains_point(std::complex<double> w, bool strict) const {
    const double d = std::abs(w.real() - center);
    return strict ? d < half_width : d <= half_width;
}

bool StripDomain::contains_disk(double a, double r) const {
    if (r < 0.0) throw std::domain_error("contains_disk: negative radius");
    return std::abs(a - center) <= half_width - r;
}

bool janowski_member(JanowskiParams params) {
    double A = params.A, B = params.B;
    if (A == B) throw std::domain_error("janowski_member: A == B is a constant map");
    if (A < B) {  // z -> -z leaves the image disk unchanged
        A = -A;
        B = -B;
    }
    if (std::abs(B) >= 1.0 || A > 1.0)
        throw std::domain_error("janowski_member: need -1 < B < A <= 1 up to sign flip");

    const double lo = (1.0 - A) / (1.0 - B);
    const double hi = (1.0 + A) / (1.0 + B);
    const bool member = (1.0 - pi / 4.0 <= lo) && (hi <= 1.0 + pi / 4.0);

    // Image-disk route: endpoints of the diameter are a-r and a+r.
    const double a = (1.0 - A * B) / (1.0 - B * B);
    const double r = (A - B) / (1.0 - B * B);
    if (std::abs((a - r) - lo) > 1e-12 * std::max(1.0, std::abs(lo)) ||
        std::abs((a + r) - hi) > 1e-12 * std::max(1.0, std::abs(hi)))
        throw std::logic_error("janowski_member: disk form disagrees with diameter endpoints");
    if (member != StripDomain{}.contains_disk(a, r) &&
        std::min(std::abs(lo - (1.0 - pi / 4.0)), std::abs(hi - (1.0 + pi / 4.0))) > 1e-12)
        throw std::logic_error("janowski_member: disk route disagrees with diameter route");

    // Binding-side form: a = 1 - B*r, so the left wall binds iff B >= 0 and
    // the right wall is then automatic (and vice versa).
    const double bound = pi / 4.0 + ((B >= 0.0) ? (1.0 - pi / 4.0) : (1.0 + pi / 4.0)) * B;
    if (member != (A <= bound) && std::abs(A - bound) > 1e-12)
        throw std::logic_error("janowski_member: binding-side form disagrees");

    return member;
}

namespace {

SampleReport sample_impl(const std::function<std::complex<double>(std::complex<double>)>& psi,
                         std::span<const double> radii, int angles) {
    if (angles < 1) throw std::invalid_argument("subordination_sample: need angles >= 1");
    const StripDomain strip;
    SampleReport rep;
    rep.pass = true;
    rep.worst_margin = strip.half_width;
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("subordination_sample: radii must lie in (0,1)");
        for (int k = 0; k < angles; ++k) {
            const double th = 2.0 * pi * k / angles;
            const std::complex<double> z = std::polar(r, th);
            const std::complex<double> w = psi(z);
            const double margin = strip.half_width - std::abs(w.real() - strip.center);
            ++rep.samples;
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_z = z;
                rep.worst_value = w;
            }
        }
    }
    rep.pass = rep.worst_margin >= 0.0;
    return rep;
}

}  // namespace

SampleReport subordination_sample(
    const std::function<std::complex<double>(std::complex<double>)>& psi,
    std::span<const double> radii, int angles) {
    return sample_impl(psi, radii, angles);
}

SampleReport subordination_sample(const PowerSeries& psi,
                                  std::span<const double> radii, int angles) {
    return sample_impl([&psi](std::complex<double> z) { return psi.eval(z); }, radii, angles);
}

const std::vector<double>& default_sample_radii() {
    static const std::vector<double> radii = {0.5, 0.9, 0.99, 0.999};
    return radii;
}

SymmetryReport symmetry_diagnostics(double r, int angles) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("symmetry_diagnostics: r must lie in (0,1)");
    if (angles < 2) throw std::invalid_argument("symmetry_diagnostics: need angles >= 2");
    SymmetryReport rep;
    for (int k = 0; k <= angles; ++k) {
        const double th = 0.5 * pi * k / angles;
        const std::complex<double> g1 = std::atan(std::polar(r, th));
        const std::complex<double> g2 = std::atan(std::polar(r, pi - th));
        rep.im_mismatch = std::max(rep.im_mismatch, std::abs(g1.imag() - g2.imag()));
        rep.re_sum = std::max(rep.re_sum, std::abs(g1.real() + g2.real()));
    }
    return rep;
}

}  // namespace arcstar
