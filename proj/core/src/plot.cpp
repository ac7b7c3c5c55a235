#include "arcstar/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "arcstar/classes.hpp"
#include "arcstar/radius.hpp"
#include "arcstar/strip.hpp"

namespace arcstar {

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const Polyline& line, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open " + file.string());
    out << "theta,re,im\n";
    for (size_t i = 0; i < line.points.size(); ++i)
        out << num(line.theta[i]) << ',' << num(line.points[i].real()) << ','
            << num(line.points[i].imag()) << '\n';
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

void write_svg(const std::vector<Polyline>& lines, const std::filesystem::path& file) {
    double lo_x = -0.1, hi_x = 2.1, lo_y = -1.1, hi_y = 1.1;
    for (const auto& l : lines)
        for (const auto& w : l.points) {
            lo_x = std::min(lo_x, w.real());
            hi_x = std::max(hi_x, w.real());
            lo_y = std::min(lo_y, w.imag());
            hi_y = std::max(hi_y, w.imag());
        }
    const double span = std::max(hi_x - lo_x, hi_y - lo_y);
    const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
    const auto X = [&](double x) { return 500.0 + 900.0 * (x - cx) / span; };
    const auto Y = [&](double y) { return 500.0 - 900.0 * (y - cy) / span; };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open " + file.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
        << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
        << "<line x1=\"" << X(lo_x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(hi_x)
        << "\" y2=\"" << Y(0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n"
        << "<line x1=\"" << X(0) << "\" y1=\"" << Y(lo_y) << "\" x2=\"" << X(0)
        << "\" y2=\"" << Y(hi_y) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    size_t ci = 0;
    for (const auto& l : lines) {
        if (l.points.size() == 1) {
            out << "<circle cx=\"" << X(l.points[0].real()) << "\" cy=\""
                << Y(l.points[0].imag()) << "\" r=\"5\" fill=\"" << colors[ci % 6]
                << "\"><title>" << l.name << "</title></circle>\n";
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 6]
                << "\" stroke-width=\"2\" points=\"";
            for (const auto& w : l.points) out << X(w.real()) << ',' << Y(w.imag()) << ' ';
            out << "\"><title>" << l.name << "</title></polyline>\n";
        }
        ++ci;
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

Polyline sample_circle_image(const std::string& name,
                             const std::function<std::complex<double>(std::complex<double>)>& f,
                             double r, int points) {
    Polyline line;
    line.name = name;
    line.theta.reserve(points + 1);
    line.points.reserve(points + 1);
    for (int k = 0; k <= points; ++k) {
        const double th = 2.0 * pi * k / points;
        line.theta.push_back(th);
        line.points.push_back(f(std::polar(r, th)));
    }
    return line;
}

std::vector<Polyline> strip_plot(double r, int points) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("strip_plot: r must lie in (0,1)");
    std::vector<Polyline> lines;

    const double span = 2.0;
    for (double side : {-1.0, 1.0}) {
        Polyline wall;
        wall.name = side < 0 ? "strip_left" : "strip_right";
        for (int k = 0; k <= points; ++k) {
            const double t = -span + 2.0 * span * k / points;
            wall.theta.push_back(t);
            wall.points.emplace_back(1.0 + side * pi / 4.0, t);
        }
        lines.push_back(std::move(wall));
    }

    lines.push_back(sample_circle_image(
        "inscribed_disk",
        [](std::complex<double> z) { return 1.0 + (pi / 4.0) * z; }, 1.0, points));
    lines.push_back(
        sample_circle_image("tau_circle", [](std::complex<double> z) { return tau(z); }, r,
                            points));
    return lines;
}

std::vector<Polyline> pair_plot(const std::string& pair, double r, int points) {
    const ClassDescriptor* cls = nullptr;
    for (const auto& c : comparison_classes())
        if (c.slug == pair) cls = &c;
    if (!cls || cls->family == Family::lemniscate)
        throw std::invalid_argument("pair_plot: expected one of e, SG, C, wp, crescent");

    const RadiusResult rad = radius_in(cls->family);
    if (r <= 0.0) r = rad.numeric;
    if (!(r < 1.0)) throw std::domain_error("pair_plot: r must lie in (0,1)");

    std::vector<Polyline> lines;
    lines.push_back(sample_circle_image(
        "tau_circle", [](std::complex<double> z) { return tau(z); }, r, points));
    lines.push_back(sample_circle_image("class_boundary", cls->psi, 1.0, points));
    const double delta = cls->center_disk_radius;
    lines.push_back(sample_circle_image(
        "class_center_disk",
        [delta](std::complex<double> z) { return 1.0 + delta * z; }, 1.0, points));

    Polyline contact;
    contact.name = "contact";
    contact.theta.push_back(pi);
    contact.points.emplace_back(rad.witness.boundary_value, 0.0);
    lines.push_back(std::move(contact));
    return lines;
}

}  // namespace arcstar
