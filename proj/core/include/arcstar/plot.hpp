#pragma once

#include <complex>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace arcstar {

/// A sampled boundary curve: rows of (theta, Re w, Im w).
struct Polyline {
    std::string name;
    std::vector<double> theta;
    std::vector<std::complex<double>> points;
};

/// CSV with header "theta,re,im".
void write_csv(const Polyline& line, const std::filesystem::path& file);

/// All curves overlaid in a single 1000x1000-viewBox SVG with axis lines.
void write_svg(const std::vector<Polyline>& lines, const std::filesystem::path& file);

Polyline sample_circle_image(const std::string& name,
                             const std::function<std::complex<double>(std::complex<double>)>& f,
                             double r, int points);

/// The strip picture: boundary lines Re = 1 +- pi/4, the inscribed disk
/// D(1, pi/4), and the image of |z| = r under the strip map.
std::vector<Polyline> strip_plot(double r, int points = 720);

/// One inclusion picture: image of |z| = r under the strip map, the
/// comparison class's boundary curve psi(e^{i theta}), its center disk,
/// and the contact point (as a one-row polyline).  `pair` is the class
/// slug ("e", "SG", "C", "wp", "crescent"); r defaults to the sharp
/// radius when <= 0.
std::vector<Polyline> pair_plot(const std::string& pair, double r = 0.0, int points = 720);

}  // namespace arcstar
