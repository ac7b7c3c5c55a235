#include "arcstar/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iterator>
#include <numbers>
#include <random>

#include <json.hpp>

#include "arcstar/classes.hpp"
#include "arcstar/extremal.hpp"
#include "arcstar/hankel.hpp"
#include "arcstar/power_series.hpp"
#include "arcstar/radius.hpp"
#include "arcstar/strip.hpp"
#include "arcstar/version.hpp"

namespace arcstar {

namespace {

using C = std::complex<double>;
using clock_type = std::chrono::steady_clock;

constexpr double pi = std::numbers::pi;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Runner {
public:
    explicit Runner(const VerifyOptions& opts) : opts_(opts) {
        rep_.meta = {opts.order, opts.grid_n, opts.seed, version};
    }

    VerificationReport take() && {
        std::sort(rep_.items.begin(), rep_.items.end(),
                  [](const VerificationItem& a, const VerificationItem& b) {
                      return a.name < b.name;
                  });
        return std::move(rep_);
    }

    void value(const std::string& name, const std::string& group, double reference,
               double computed, double tolerance, double runtime_ms = 0.0,
               std::string note = {}) {
        VerificationItem it;
        it.name = name;
        it.group = group;
        it.reference = reference;
        it.computed = computed;
        it.tolerance = tolerance;
        if (auto ov = opts_.tol_overrides.find(name); ov != opts_.tol_overrides.end())
            it.tolerance = ov->second;
        it.status = std::abs(reference - computed) <= it.tolerance ? "pass" : "fail";
        it.runtime_ms = opts_.timings ? runtime_ms : 0.0;
        it.note = std::move(note);
        rep_.items.push_back(std::move(it));
    }

    void boolean(const std::string& name, const std::string& group, bool ok,
                 double runtime_ms = 0.0, std::string note = {}) {
        value(name, group, 1.0, ok ? 1.0 : 0.0, 0.5, runtime_ms, std::move(note));
    }

    void skip(const std::string& name, const std::string& group, double reference,
              int min_order) {
        VerificationItem it;
        it.name = name;
        it.group = group;
        it.reference = reference;
        it.computed = 0.0;
        it.tolerance = 0.0;
        it.status = "skip";
        it.note = "requires series order >= " + std::to_string(min_order);
        rep_.items.push_back(std::move(it));
    }

    const VerifyOptions& opts() const { return opts_; }

    // Time-of-day text breaks byte-for-byte reproducibility, so measured
    // durations appear in notes only when timings are requested.
    std::string timed_note(const std::string& base, double ms) const {
        if (!opts_.timings) return base;
        return base + ", took " + fmt17(ms) + " ms";
    }

private:
    VerifyOptions opts_;
    VerificationReport rep_;
};

// ---- a01: coefficients of the order-2 extremal ------------------------------

void run_extremal_series(Runner& r) {
    const std::string g = "a01 extremal series";
    const auto t0 = clock_type::now();
    const ExtremalFunction tt =
        build_from_psi(PowerSeries::arctan(r.opts().order), "strip extremal");
    const double elapsed = ms_since(t0);

    struct Row {
        int degree;
        double ref;
    };
    const Row rows[] = {
        {1, 1.0},
        {2, 1.0},
        {3, 0.5},
        {4, 1.0 / 18.0},
        {5, -5.0 / 72.0},
        {6, -13.0 / 1800.0},
        // Higher-degree values from an independent symbolic expansion.
        {9, -203221.0 / 12700800.0},
        {10, 853.0 / 68584320.0},
    };
    for (const Row& row : rows) {
        const std::string name = "a01.series.coeff-z" + std::to_string(row.degree);
        if (r.opts().order < row.degree) {
            r.skip(name, g, row.ref, row.degree);
            continue;
        }
        r.value(name, g, row.ref, tt.f[row.degree], 1e-12, elapsed);
    }
    r.boolean("a01.series.build-runtime", g, elapsed < 100.0, elapsed,
              r.timed_note("budget 0.1 s", elapsed));
}

// ---- a02: coefficient map against the series route --------------------------

void run_coeff_map(Runner& r) {
    const std::string g = "a02 coefficient map";
    const CoeffVector a = coeffs_from_p({2.0, 2.0, 2.0, 2.0});
    r.value("a02.coeffmap.a2", g, 1.0, a.a2.real(), 1e-12);
    r.value("a02.coeffmap.a3", g, 0.5, a.a3.real(), 1e-12);
    r.value("a02.coeffmap.a4", g, 1.0 / 18.0, a.a4.real(), 1e-12);
    r.value("a02.coeffmap.a5", g, -5.0 / 72.0, a.a5.real(), 1e-12);
    const double imag = std::max({std::abs(a.a2.imag()), std::abs(a.a3.imag()),
                                  std::abs(a.a4.imag()), std::abs(a.a5.imag())});
    r.value("a02.coeffmap.max-imag", g, 0.0, imag, 1e-12);

    if (r.opts().order < 5) {
        r.skip("a02.coeffmap.matches-series", g, 0.0, 5);
        return;
    }
    const ExtremalFunction tt = build_from_psi(PowerSeries::arctan(r.opts().order));
    const double diff = std::max({std::abs(a.a2.real() - tt.f[2]), std::abs(a.a3.real() - tt.f[3]),
                                  std::abs(a.a4.real() - tt.f[4]), std::abs(a.a5.real() - tt.f[5])});
    r.value("a02.coeffmap.matches-series", g, 0.0, diff, 1e-12);
}

// ---- a03: fifth-coefficient value at the cited moment vector ----------------

void run_sharp_a5(Runner& r) {
    const std::string g = "a03 sharp a5";
    PCoeffs p;
    p.p1 = 2.0;
    p.p2 = C(-44.0, -std::sqrt(22.0)) / 33.0;
    p.p3 = -2.0;
    p.p4 = 2.0;
    const C a5 = coeffs_from_p(p).a5;
    r.value("a03.sharp-a5.value", g, 323.0 / 528.0, std::abs(a5), 1e-12);
    r.value("a03.sharp-a5.imag", g, 0.0, std::abs(a5.imag()), 1e-12);
}

// ---- a04: box majorant maximization and face constants -----------------------

void run_surrogate(Runner& r) {
    const std::string g = "a04 surrogate maximization";
    const auto t0 = clock_type::now();
    const SurrogateMax m = maximize_surrogate(r.opts().grid_n, 60);
    const FaceReport faces = surrogate_faces();
    const double elapsed = ms_since(t0);

    r.value("a04.surrogate.max", g, 1.0 / 9.0, m.value, 1e-6, elapsed,
            "the majorant's y = 1 face has an interior maximum " + fmt17(faces.y1_face_max) +
                " at p = " + fmt17(faces.y1_face_argmax_p) + ", x = " +
                fmt17(faces.y1_face_argmax_x) + ", above the 1/9 attained by the class");
    const double dist = std::max({std::abs(m.argmax.p), std::abs(m.argmax.x),
                                  std::abs(m.argmax.y - 1.0)});
    r.value("a04.surrogate.argmax-dist", g, 0.0, dist, 0.02, 0.0,
            "distance to (0,0,1)");
    r.value("a04.surrogate.p2-face-value", g, 49.0 / 1296.0, faces.p2_face_value, 1e-12);
    r.value("a04.surrogate.p2-face-spread", g, 0.0, faces.p2_face_spread, 1e-12);
    r.value("a04.surrogate.g3-max", g, 0.102376, faces.g3_max, 1e-5);
    r.value("a04.surrogate.s1-max", g, 0.0393988, faces.s1_max, 1e-6);
    r.value("a04.surrogate.h0x0-max", g, 0.0680413, faces.h0x0_max, 1e-6);
    r.boolean("a04.surrogate.runtime", g, elapsed < 10000.0, elapsed,
              r.timed_note("budget 10 s", elapsed));
}

// ---- a05: search attainment of the coefficient-functional bounds ------------

void run_search(Runner& r) {
    const std::string g = "a05 functional search";
    const auto t0 = clock_type::now();
    const Target targets[] = {Target::a4, Target::fekete_szego, Target::h2, Target::h3,
                              Target::a5};
    const char* slugs[] = {"a4", "fs", "h2", "h3", "a5"};
    for (size_t i = 0; i < std::size(targets); ++i) {
        const SearchResult res = maximize_functional(targets[i], r.opts().starts, r.opts().seed);
        const double bound = target_bound(targets[i]);
        const std::string base = std::string("a05.search.") + slugs[i];
        const std::string note =
            "attained " + fmt17(res.value) + ", reference bound " + fmt17(bound);
        r.boolean(base + ".reaches-bound", g, res.value >= bound - 1e-3, 0.0, note);
        r.boolean(base + ".within-bound", g, res.value <= bound + 1e-9, 0.0, note);
    }
    const double elapsed = ms_since(t0);
    r.boolean("a05.search.runtime", g, elapsed < 30000.0, elapsed,
              r.timed_note("budget 30 s", elapsed));
}

// ---- a06: the ten sharp radii ------------------------------------------------

void run_radius_catalog(Runner& r) {
    const std::string g = "a06 radius catalog";
    struct Printed {
        const char* slug;
        double value;
    };
    // Decimals printed alongside the closed forms in the source material.
    const Printed printed[] = {
        {"wp-to-tau", 0.484035},     {"tau-to-e", 0.732368},  {"tau-to-SG", 0.498088},
        {"tau-to-C", 0.786843},      {"tau-to-wp", 0.385426}, {"tau-to-crescent", 0.66347},
    };

    const auto slug_of = [](const RadiusResult& res) {
        std::string s = res.name;  // e.g. "S*_L -> S*_tau"
        const auto strip_name = [](std::string t) {
            if (t.rfind("S*_", 0) == 0) t = t.substr(3);
            if (t == "Delta*") t = "crescent";
            return t;
        };
        const auto arrow = s.find(" -> ");
        return strip_name(s.substr(0, arrow)) + "-to-" + strip_name(s.substr(arrow + 4));
    };

    for (const RadiusResult& res : radius_catalog()) {
        const std::string base = "a06.radius." + slug_of(res);
        if (res.closed_form)
            r.value(base + ".value", g, *res.closed_form, res.numeric, 1e-10, 0.0,
                    "closed form " + fmt17(*res.closed_form));
        for (const Printed& pr : printed)
            if (base == std::string("a06.radius.") + pr.slug)
                r.value(base + ".printed", g, pr.value, res.numeric, 1e-5);
        r.value(base + ".residual", g, 0.0, res.residual, 1e-10);
        const ProbeReport probe = sharpness_probe(res);
        r.boolean(base + ".sharp", g, probe.ok, 0.0,
                  "contact error " + fmt17(probe.contact_error) + ", inside margin " +
                      fmt17(probe.inside_margin) + ", outside excess " +
                      fmt17(probe.outside_excess));
    }
}

// ---- a07: convexity radius ----------------------------------------------------

void run_convexity(Runner& r) {
    const std::string g = "a07 convexity radius";
    const RadiusResult r0 = convexity_radius(0.0);
    r.value("a07.convexity.r0", g, 0.387888, r0.numeric, 1e-5);
    r.value("a07.convexity.residual-r0", g, 0.0, r0.residual, 1e-10);
    double prev = r0.numeric;
    bool decreasing = true;
    for (double gamma : {0.25, 0.5, 0.75}) {
        const double cur = convexity_radius(gamma).numeric;
        decreasing = decreasing && cur < prev;
        prev = cur;
    }
    r.boolean("a07.convexity.decreasing", g, decreasing, 0.0,
              "gamma in {0, 0.25, 0.5, 0.75}");
}

// ---- a08: covering radius -----------------------------------------------------

void run_covering(Runner& r) {
    const std::string g = "a08 covering radius";
    const double computed = covering_radius();

    // Independent oracle: Catalan's constant by its alternating series.
    double catalan = 0.0;
    double sign = 1.0;
    for (long k = 0; k < 200000; ++k) {
        const double d = 2.0 * k + 1.0;
        catalan += sign / (d * d);
        sign = -sign;
    }
    r.value("a08.covering.vs-quadrature", g, std::exp(-catalan), computed, 1e-8, 0.0,
            "series route for the constant vs quadrature route");
    r.boolean("a08.covering.interval", g,
              computed > 1.0 - pi / 4.0 && computed < 1.0, 0.0,
              "value " + fmt17(computed));

    const double near = growth_bounds(1.0 - 1e-6).first;
    const double mid = growth_bounds(0.99).first;
    r.boolean("a08.covering.growth-limit", g,
              mid < near && near < computed && computed - near < 1e-6, 0.0,
              "lower growth bound increases to the covering radius");
}

// ---- a09: inclusion constants --------------------------------------------------

void run_inclusion(Runner& r) {
    const std::string g = "a09 inclusion constants";
    const InclusionConstants c = inclusion_constants();
    r.value("a09.inclusion.alpha-star", g, 1.0 - pi / 4.0, c.alpha_star, 1e-15);
    r.value("a09.inclusion.reciprocal", g, 4.0 / (4.0 + pi), c.reciprocal_bound, 1e-15);
    r.value("a09.inclusion.m-threshold", g, 1.0 + pi / 4.0, c.m_threshold, 1e-15);
    r.value("a09.inclusion.kst-min", g, 1.0 + 4.0 / pi, c.k_min0, 1e-15);
    r.value("a09.inclusion.kst-threshold-at-0", g, c.k_min0, kst_threshold(0.0), 1e-15);

    std::mt19937_64 rng(r.opts().seed);
    long mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        const double k = 1.0 + 9.0 * next_unit(rng) + 1e-9;
        const double alpha = next_unit(rng);
        const double threshold = kst_threshold(alpha);
        if (std::abs(k - threshold) < 1e-12) continue;  // boundary: routes may round apart
        if (ellipse_in_strip(k, alpha) != (k >= threshold)) ++mismatches;
    }
    r.boolean("a09.inclusion.ellipse-equivalence", g, mismatches == 0, 0.0,
              "10^4 random (k, alpha)");
}

// ---- a10: property suites -------------------------------------------------------

void run_properties(Runner& r) {
    const std::string g = "a10 property suites";
    const auto t0 = clock_type::now();
    const LemmaReport lem = lemma_suite(100000, r.opts().seed);
    const long violations =
        lem.p_violations + lem.q_violations + lem.use_violations + lem.coeff_violations;
    r.value("a10.lemmas.violations", g, 0.0, static_cast<double>(violations), 0.0,
            ms_since(t0), "10^5 samples");
    r.value("a10.lemmas.quad-error", g, 0.0, lem.max_quad_error, 1e-8);

    std::mt19937_64 rng(r.opts().seed + 1);
    double max_diff = 0.0;
    for (int i = 0; i < 10000; ++i) {
        CaratheodoryPoint c;
        c.p1 = 2.0 * next_unit(rng);
        c.gamma = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
        c.eta = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
        c.rho = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
        const PCoeffs p = p_from_params(c);
        max_diff = std::max(max_diff,
                            std::abs(h3_direct(p) - functionals(coeffs_from_p(p)).h3));
    }
    r.value("a10.route-equality.max-diff", g, 0.0, max_diff, 1e-11, 0.0, "10^4 samples");

    long dom_violations = 0;
    for (int i = 0; i < 100000; ++i) {
        CaratheodoryPoint c;
        c.p1 = 2.0 * next_unit(rng);
        c.gamma = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
        c.eta = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
        c.rho = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
        const double h3 = std::abs(functionals(coeffs_from_p(p_from_params(c))).h3);
        const double dom = surrogate_H({c.p1, std::abs(c.gamma), std::abs(c.eta)});
        if (h3 > dom + 1e-9) ++dom_violations;
    }
    r.value("a10.domination.violations", g, 0.0, static_cast<double>(dom_violations), 0.0,
            0.0, "10^5 samples");
}

// ---- a11: membership sampling ----------------------------------------------------

void run_membership(Runner& r, clock_type::time_point suite_start) {
    const std::string g = "a11 membership";
    const auto radii = default_sample_radii();

    const auto psi1 = [](C z) { return 1.0 + 0.5 * z; };
    const auto psi2 = [](C z) { return 1.0 + 0.5 * z * std::exp(z / 17.0); };
    const auto psi3 = [](C z) { return 1.0 + 0.25 * z * std::sin(z); };
    const auto koebe = [](C z) { return (1.0 + z) / (1.0 - z); };

    const SampleReport s1 = subordination_sample(psi1, radii, default_sample_angles);
    r.boolean("a11.membership.psi1", g, s1.pass, 0.0,
              "worst margin " + fmt17(s1.worst_margin));
    r.value("a11.membership.psi1-margin", g, pi / 4.0 - 0.5 * radii.back(), s1.worst_margin,
            1e-12, 0.0, "limit toward |z| -> 1 is pi/4 - 1/2");
    const SampleReport s2 = subordination_sample(psi2, radii, default_sample_angles);
    r.boolean("a11.membership.psi2", g, s2.pass, 0.0,
              "worst margin " + fmt17(s2.worst_margin));
    const SampleReport s3 = subordination_sample(psi3, radii, default_sample_angles);
    r.boolean("a11.membership.psi3", g, s3.pass, 0.0,
              "worst margin " + fmt17(s3.worst_margin));
    const SampleReport sk = subordination_sample(koebe, radii, default_sample_angles);
    r.boolean("a11.membership.koebe-fails", g, !sk.pass, 0.0,
              "worst margin " + fmt17(sk.worst_margin));

    const double total = ms_since(suite_start);
    r.boolean("a11.full-runtime", g, total < 60000.0, total,
              r.timed_note("budget 60 s for the whole suite", total));
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
    Runner runner(options);
    const auto t0 = clock_type::now();
    run_extremal_series(runner);
    run_coeff_map(runner);
    run_sharp_a5(runner);
    run_surrogate(runner);
    run_search(runner);
    run_radius_catalog(runner);
    run_convexity(runner);
    run_covering(runner);
    run_inclusion(runner);
    run_properties(runner);
    run_membership(runner, t0);
    return std::move(runner).take();
}

bool VerificationReport::all_pass() const {
    return std::none_of(items.begin(), items.end(),
                        [](const VerificationItem& it) { return it.status == "fail"; });
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["meta"] = {{"series_order", meta.series_order},
                 {"grid_n", meta.grid_n},
                 {"seed", meta.seed},
                 {"version", meta.version}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items) {
        arr.push_back({{"name", it.name},
                       {"group", it.group},
                       {"reference_value", it.reference},
                       {"computed_value", it.computed},
                       {"tolerance", it.tolerance},
                       {"status", it.status},
                       {"runtime_ms", it.runtime_ms},
                       {"note", it.note}});
    }
    j["items"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_markdown() const {
    std::string out = "# Verification report\n\n";
    out += "- series order: " + std::to_string(meta.series_order) + "\n";
    out += "- grid: " + std::to_string(meta.grid_n) + "\n";
    out += "- seed: " + std::to_string(meta.seed) + "\n";
    out += "- version: " + meta.version + "\n";
    std::string group;
    for (const auto& it : items) {
        if (it.group != group) {
            group = it.group;
            out += "\n## " + group + "\n\n";
            out += "| item | reference | computed | tolerance | status |\n";
            out += "|---|---|---|---|---|\n";
        }
        out += "| " + it.name + " | " + fmt17(it.reference) + " | " + fmt17(it.computed) +
               " | " + fmt17(it.tolerance) + " | " + it.status + " |\n";
    }
    return out;
}

std::string VerificationReport::to_csv() const {
    std::string out = "name,group,reference_value,computed_value,tolerance,status,runtime_ms\n";
    for (const auto& it : items) {
        out += it.name + ",\"" + it.group + "\"," + fmt17(it.reference) + "," +
               fmt17(it.computed) + "," + fmt17(it.tolerance) + "," + it.status + "," +
               fmt17(it.runtime_ms) + "\n";
    }
    return out;
}

std::vector<GroupSummary> summarize_groups(const VerificationReport& report) {
    std::vector<GroupSummary> out;
    for (const auto& it : report.items) {
        const std::string prefix = it.name.substr(0, it.name.find('.'));
        if (out.empty() || out.back().prefix != prefix) {
            GroupSummary s;
            s.prefix = prefix;
            s.title = it.group;
            out.push_back(s);
        }
        if (it.status == "pass") ++out.back().passed;
        else if (it.status == "fail") ++out.back().failed;
        else ++out.back().skipped;
    }
    return out;
}

}  // namespace arcstar
