#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "arcstar/power_series.hpp"

namespace arcstar {

/// The map tau(z) = 1 + arctan z (principal branch).  It is convex
/// univalent on the unit disk and sends it onto the vertical strip
/// 1 - pi/4 <= Re w <= 1 + pi/4; the imaginary part is unbounded.
/// Throws on the branch points z = +-i.
std::complex<double> tau(std::complex<double> z);

/// (min, max) of Re tau over |z| = r, attained at -r and +r:
/// (1 - arctan r, 1 + arctan r).  Requires 0 < r < 1.
std::pair<double, double> re_range_on_circle(double r);

/// The vertical strip |Re w - center| <= half_width.  Default-constructed
/// it is the image of the unit disk under tau.
struct StripDomain {
    double center = 1.0;
    double half_width = std::numbers::pi / 4.0;

    /// Closed membership by default; `strict` switches to the open strip.
    bool contains_point(std::complex<double> w, bool strict = false) const;

    /// Closed disk D(a, r) inside the strip: |a - center| <= half_width - r.
    /// Requires r >= 0.
    bool contains_disk(double a, double r) const;
};

/// Parameters of the bilinear map (1 + Az)/(1 + Bz).
struct JanowskiParams {
    double A = 0.0;
    double B = 0.0;
};

/// Whether (1+Az)/(1+Bz) maps the disk into the strip, i.e.
/// 1 - pi/4 <= (1-A)/(1-B) and (1+A)/(1+B) <= 1 + pi/4.  When A < B the
/// parameters are first flipped to (-A, -B) (the z -> -z rotation leaves
/// the image disk unchanged), so the test is symmetric in the sign of A
/// when B = -A or B = 0.  The image-disk form a = (1-AB)/(1-B^2),
/// r = (A-B)/(1-B^2) is computed alongside and checked for agreement.
/// Throws for the degenerate |B| = 1 map and for A == B.
bool janowski_member(JanowskiParams params);

/// Result of sampling a candidate subordination target over circles.
struct SampleReport {
    bool pass = false;
    double worst_margin = 0.0;             // min over samples of half_width - |Re w - center|
    std::complex<double> worst_z;          // sample point attaining the worst margin
    std::complex<double> worst_value;      // its image
    long samples = 0;
};

/// Checks psi(z) against the strip over |z| in `radii` with `angles`
/// equally spaced directions per circle.  Sufficient for subordination
/// to tau here: the strip is convex and psi(0) = 1 is assumed.  Default
/// sampling concentrates near the boundary, where the deviation of every
/// function used here is largest.
SampleReport subordination_sample(
    const std::function<std::complex<double>(std::complex<double>)>& psi,
    std::span<const double> radii, int angles);
SampleReport subordination_sample(const PowerSeries& psi,
                                  std::span<const double> radii, int angles);

const std::vector<double>& default_sample_radii();  // {0.5, 0.9, 0.99, 0.999}
inline constexpr int default_sample_angles = 4096;

/// Residuals of the strip's symmetry about Re w = 1: with g = arctan,
/// max over a theta-grid of |Im g(theta) - Im g(pi - theta)| and of
/// |Re g(theta) + Re g(pi - theta)| on |z| = r.  Both vanish to rounding.
struct SymmetryReport {
    double im_mismatch = 0.0;
    double re_sum = 0.0;
};
SymmetryReport symmetry_diagnostics(double r, int angles);

}  // namespace arcstar
