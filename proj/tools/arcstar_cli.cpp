// arcstar: numerical verification toolkit for the starlike class whose
// structure map is 1 + arctan z (a vertical strip domain).
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcstar/classes.hpp"
#include "arcstar/extremal.hpp"
#include "arcstar/hankel.hpp"
#include "arcstar/plot.hpp"
#include "arcstar/radius.hpp"
#include "arcstar/report.hpp"
#include "arcstar/version.hpp"

namespace {

namespace fs = std::filesystem;
using arcstar::VerifyOptions;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

int cmd_verify(const VerifyOptions& opts, const std::string& format, const fs::path& out_dir) {
    const arcstar::VerificationReport report = arcstar::run_verification(opts);

    fs::create_directories(out_dir);
    write_file(out_dir / "report.json", report.to_json());
    write_file(out_dir / "report.md", report.to_markdown());
    if (format == "csv") write_file(out_dir / "report.csv", report.to_csv());

    for (const auto& gs : arcstar::summarize_groups(report)) {
        std::printf("%-6s %-28s %3d pass %3d fail %3d skip\n", gs.prefix.c_str(),
                    gs.title.c_str(), gs.passed, gs.failed, gs.skipped);
    }
    int fails = 0;
    for (const auto& it : report.items)
        if (it.status == "fail") {
            ++fails;
            std::printf("FAIL %s: reference %s, computed %s, tolerance %s%s%s\n",
                        it.name.c_str(), fmt17(it.reference).c_str(),
                        fmt17(it.computed).c_str(), fmt17(it.tolerance).c_str(),
                        it.note.empty() ? "" : " -- ", it.note.c_str());
        }
    std::printf("%s: %d item(s) failed; reports in %s\n",
                report.all_pass() ? "PASS" : "FAIL", fails, out_dir.string().c_str());
    return report.all_pass() ? 0 : 1;
}

int cmd_radius_table(const std::string& format) {
    const auto catalog = arcstar::radius_catalog();
    const auto row_closed = [](const arcstar::RadiusResult& r) {
        return r.closed_form ? fmt17(*r.closed_form) : std::string();
    };
    if (format == "md") {
        std::printf("| name | closed_form | numeric | residual | sharp_contact |\n");
        std::printf("|---|---|---|---|---|\n");
        for (const auto& r : catalog)
            std::printf("| %s | %s | %s | %s | %s |\n", r.name.c_str(),
                        row_closed(r).c_str(), fmt17(r.numeric).c_str(),
                        fmt17(r.residual).c_str(), fmt17(r.witness.boundary_value).c_str());
    } else {
        std::printf("name,closed_form,numeric,residual,sharp_contact\n");
        for (const auto& r : catalog)
            std::printf("\"%s\",%s,%s,%s,%s\n", r.name.c_str(), row_closed(r).c_str(),
                        fmt17(r.numeric).c_str(), fmt17(r.residual).c_str(),
                        fmt17(r.witness.boundary_value).c_str());
    }
    return 0;
}

int cmd_coeff_bounds(const VerifyOptions& opts, const std::string& format) {
    using arcstar::Target;
    const Target targets[] = {Target::a4, Target::a5, Target::fekete_szego, Target::h2,
                              Target::h3};
    if (format == "md") {
        std::printf("| functional | bound | attained | gap |\n|---|---|---|---|\n");
    } else {
        std::printf("functional,bound,attained,gap\n");
    }
    for (Target t : targets) {
        const auto res = arcstar::maximize_functional(t, opts.starts, opts.seed);
        const double bound = arcstar::target_bound(t);
        if (format == "md")
            std::printf("| %s | %s | %s | %s |\n", arcstar::target_name(t),
                        fmt17(bound).c_str(), fmt17(res.value).c_str(),
                        fmt17(bound - res.value).c_str());
        else
            std::printf("%s,%s,%s,%s\n", arcstar::target_name(t), fmt17(bound).c_str(),
                        fmt17(res.value).c_str(), fmt17(bound - res.value).c_str());
    }
    return 0;
}

int cmd_hankel_max(const VerifyOptions& opts, const std::string& target) {
    nlohmann::json j;
    j["seed"] = opts.seed;
    if (target == "surrogate") {
        const auto res = arcstar::maximize_surrogate(opts.grid_n, 60);
        j["target"] = "surrogate";
        j["bound"] = 1.0 / 9.0;
        j["attained"] = res.value;
        j["argmax"] = {{"p", res.argmax.p}, {"x", res.argmax.x}, {"y", res.argmax.y}};
        j["evaluations"] = res.evaluations;
    } else {
        const arcstar::Target t = arcstar::target_from_name(target);
        const auto res = arcstar::maximize_functional(t, opts.starts, opts.seed);
        j["target"] = arcstar::target_name(t);
        j["bound"] = arcstar::target_bound(t);
        j["attained"] = res.value;
        j["argmax"] = {{"p1", res.argmax.p1},
                       {"gamma_abs", std::abs(res.argmax.gamma)},
                       {"gamma_arg", std::arg(res.argmax.gamma)},
                       {"eta_abs", std::abs(res.argmax.eta)},
                       {"eta_arg", std::arg(res.argmax.eta)},
                       {"rho_abs", std::abs(res.argmax.rho)},
                       {"rho_arg", std::arg(res.argmax.rho)}};
        j["evaluations"] = res.evaluations;
    }
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
}

int cmd_plot(const std::string& which, double r, const fs::path& out_dir,
             const std::string& svg) {
    std::vector<arcstar::Polyline> lines;
    if (which == "strip") {
        lines = arcstar::strip_plot(r > 0.0 ? r : 0.999);
    } else if (which.rfind("tau-in-", 0) == 0) {
        lines = arcstar::pair_plot(which.substr(7), r);
    } else {
        std::fprintf(stderr, "unknown plot target: %s\n", which.c_str());
        return 2;
    }
    fs::create_directories(out_dir);
    for (const auto& line : lines)
        arcstar::write_csv(line, out_dir / (which + "_" + line.name + ".csv"));
    if (!svg.empty()) arcstar::write_svg(lines, out_dir / svg);
    std::printf("wrote %zu curve(s) to %s\n", lines.size(), out_dir.string().c_str());
    return 0;
}

int cmd_growth_table(const std::string& format) {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
    grid.push_back(0.99);
    if (format == "md")
        std::printf("| r | lower | upper | rotation |\n|---|---|---|---|\n");
    else
        std::printf("r,lower,upper,rotation\n");
    for (double r : grid) {
        const auto [lo, hi] = arcstar::growth_bounds(r);
        const double rot = arcstar::rotation_bound(r);
        if (format == "md")
            std::printf("| %s | %s | %s | %s |\n", fmt17(r).c_str(), fmt17(lo).c_str(),
                        fmt17(hi).c_str(), fmt17(rot).c_str());
        else
            std::printf("%s,%s,%s,%s\n", fmt17(r).c_str(), fmt17(lo).c_str(),
                        fmt17(hi).c_str(), fmt17(rot).c_str());
    }
    std::printf("%scovering radius%s%s\n", format == "md" ? "\n" : "",
                format == "md" ? ": " : ",", fmt17(arcstar::covering_radius()).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the arctan strip class of starlike functions"};
    app.set_version_flag("--version", arcstar::version);
    app.require_subcommand(1);

    VerifyOptions opts;
    std::string format = "json";
    std::string out_dir = ".";
    std::string tol_overrides;
    app.add_option("--order", opts.order, "series truncation order")->capture_default_str();
    app.add_option("--grid", opts.grid_n, "surrogate grid points per axis")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "search seed")->capture_default_str();
    app.add_option("--starts", opts.starts, "multistart count")->capture_default_str();
    app.add_option("--format", format, "output format: json|md|csv")
        ->check(CLI::IsMember({"json", "md", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--tol-overrides", tol_overrides,
                   "JSON object mapping item name to tolerance");
    app.add_flag("--timings", opts.timings,
                 "emit measured runtimes (reports are then not byte-reproducible)");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->fallthrough();
    auto* radius = app.add_subcommand("radius-table", "print the ten sharp radii");
    radius->fallthrough();
    auto* coeff = app.add_subcommand("coeff-bounds", "bound vs search-attained value");
    coeff->fallthrough();
    auto* hankel = app.add_subcommand("hankel-max", "maximize one functional, JSON output");
    hankel->fallthrough();
    std::string target = "h3";
    hankel->add_option("--target", target, "a4|a5|fs|h2|h3|surrogate")
        ->check(CLI::IsMember({"a4", "a5", "fs", "h2", "h3", "surrogate"}))
        ->capture_default_str();
    auto* plot = app.add_subcommand("plot", "emit boundary-curve CSV data");
    plot->fallthrough();
    std::string which = "strip";
    double plot_r = 0.0;
    std::string svg;
    plot->add_option("--which", which,
                     "strip|tau-in-e|tau-in-SG|tau-in-C|tau-in-wp|tau-in-crescent")
        ->capture_default_str();
    plot->add_option("--r", plot_r, "circle radius (defaults to the sharp radius)");
    plot->add_option("--svg", svg, "also write a combined SVG with this filename");
    auto* growth = app.add_subcommand("growth-table", "growth and rotation bounds table");
    growth->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (!tol_overrides.empty()) {
            const auto j = nlohmann::json::parse(tol_overrides);
            for (const auto& [key, val] : j.items())
                opts.tol_overrides[key] = val.get<double>();
        }
        if (verify->parsed()) return cmd_verify(opts, format, out_dir);
        if (radius->parsed()) return cmd_radius_table(format == "json" ? "csv" : format);
        if (coeff->parsed()) return cmd_coeff_bounds(opts, format == "json" ? "csv" : format);
        if (hankel->parsed()) return cmd_hankel_max(opts, target);
        if (plot->parsed()) return cmd_plot(which, plot_r, out_dir, svg);
        if (growth->parsed()) return cmd_growth_table(format == "json" ? "csv" : format);
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
