#include "arcstar/hankel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "arcstar/roots.hpp"

namespace arcstar {

namespace {

using C = std::complex<double>;

constexpr double pi = std::numbers::pi;

// Deterministic uniform doubles in [0,1): identical across platforms,
// unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

CaratheodoryPoint random_point(std::mt19937_64& rng) {
    CaratheodoryPoint c;
    c.p1 = 2.0 * next_unit(rng);
    c.gamma = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
    c.eta = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
    c.rho = std::polar(next_unit(rng), 2.0 * pi * next_unit(rng));
    return c;
}

}  // namespace

PCoeffs p_from_params(const CaratheodoryPoint& c) {
    const double p1 = c.p1;
    const double t = 4.0 - p1 * p1;
    if (t == 0.0) return {p1, 2.0, 2.0, 2.0};  // p1 = 2 collapses all parameter dependence

    const C g = c.gamma, e = c.eta, r = c.rho;
    const double g2 = std::norm(g), e2 = std::norm(e);
    PCoeffs p;
    p.p1 = p1;
    p.p2 = 0.5 * (p1 * p1 + g * t);
    p.p3 = 0.25 * (p1 * p1 * p1 + 2.0 * p1 * t * g - p1 * t * g * g +
                   2.0 * t * (1.0 - g2) * e);
    p.p4 = 0.125 * (p1 * p1 * p1 * p1 +
                    t * g * (p1 * p1 * (g * g - 3.0 * g + 3.0) + 4.0 * g) -
                    4.0 * t * (1.0 - g2) *
                        (p1 * (g - 1.0) * e + std::conj(g) * e * e - (1.0 - e2) * r));
    return p;
}

CoeffVector coeffs_from_p(const PCoeffs& p) {
    CoeffVector a;
    a.a2 = 0.5 * p.p1;
    a.a3 = 0.25 * p.p2;
    a.a4 = -(p.p1 * p.p1 * p.p1 / 6.0 + 0.5 * p.p1 * p.p2 - 2.0 * p.p3) / 12.0;
    a.a5 = -(-5.0 * p.p1 * p.p1 * p.p1 * p.p1 / 72.0 + 0.25 * p.p2 * p.p2 +
             p.p1 * p.p3 / 3.0 + p.p1 * p.p1 * p.p2 / 6.0 - p.p4) / 8.0;
    return a;
}

C schwarz_a4(C w1, C w2, C w3) {
    return (w3 + 1.5 * w1 * w2 + w1 * w1 * w1 / 6.0) / 3.0;
}

Functionals functionals(const CoeffVector& a) {
    Functionals f;
    f.fekete_szego = a.a2 * a.a3 - a.a4;
    f.h2 = a.a2 * a.a4 - a.a3 * a.a3;
    f.h3 = a.a3 * (a.a2 * a.a4 - a.a3 * a.a3) - a.a4 * (a.a4 - a.a2 * a.a3) +
           a.a5 * (a.a3 - a.a2 * a.a2);
    return f;
}

C h3_direct(const PCoeffs& p) {
    const C p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4;
    const C p1_2 = p1 * p1, p1_3 = p1_2 * p1, p1_4 = p1_2 * p1_2, p1_6 = p1_4 * p1_2;
    const C value = (-49.0 * p1_6 + 57.0 * p1_4 * p2 - 198.0 * p1_2 * p2 * p2 -
                     486.0 * p2 * p2 * p2 + 312.0 * p1_3 * p3 + 936.0 * p1 * p2 * p3 -
                     576.0 * p3 * p3 - 648.0 * p1_2 * p4 + 648.0 * p2 * p4) / 20736.0;
    const C via_coeffs = functionals(coeffs_from_p(p)).h3;
    if (std::abs(value - via_coeffs) > 1e-12)
        throw std::logic_error("h3_direct: polynomial and coefficient routes disagree");
    return value;
}

double surrogate_H(const CuboidPoint& q) {
    const double p = q.p, x = q.x, y = q.y;
    const double t = 4.0 - p * p;
    const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p4 * p2;
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    const double h1 = 49.0 * p6 + 81.0 * x2 * p2 * t * t + 135.0 * x3 * p2 * t * t +
                      18.0 * x4 * p2 * t * t + 324.0 * x3 * t * t + 6.0 * x2 * p4 * t +
                      117.0 * x * p4 * t + 648.0 * x2 * p2 * t + 162.0 * x3 * p4 * t;
    const double h2 = (1.0 - x2) * t *
                      (336.0 * p3 + 648.0 * p3 * x + t * (432.0 * p * x + 72.0 * p * x2));
    const double h3 = 72.0 * (1.0 - x2) * t * ((8.0 + x2) * t + 9.0 * p2 * x);
    const double h4 = 648.0 * (1.0 - x2) * t * (p2 + x * t);
    return (h1 + h2 * y + h3 * y * y + h4 * (1.0 - y * y)) / 82944.0;
}

FaceReport surrogate_faces() {
    FaceReport rep;

    // p = 2 face: every parameter drops out.
    rep.p2_face_value = surrogate_H({2.0, 0.5, 0.5});
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const double v = surrogate_H({2.0, i / 20.0, j / 20.0});
            rep.p2_face_spread = std::max(rep.p2_face_spread, std::abs(v - rep.p2_face_value));
        }

    // x = 1 face: independent of y.
    const auto g3 = [](double p) { return surrogate_H({p, 1.0, 0.0}); };
    std::tie(rep.g3_argmax, rep.g3_max) = golden_max(g3, 0.0, 2.0);

    // (x, y) = (0, 0) edge.
    const auto s1 = [](double p) { return surrogate_H({p, 0.0, 0.0}); };
    std::tie(rep.s1_argmax, rep.s1_max) = golden_max(s1, 0.0, 2.0);

    // (x, y) = (0, 1) edge: decreasing, so the maximum sits at p = 0.
    const auto s2 = [](double p) { return surrogate_H({p, 0.0, 1.0}); };
    const auto [s2_arg, s2_val] = golden_max(s2, 0.0, 2.0);
    rep.p01_edge_argmax = s2_arg;
    rep.p01_edge_max = s2_val;
    if (s2(0.0) >= s2_val) {  // golden section drifts off a boundary maximum
        rep.p01_edge_argmax = 0.0;
        rep.p01_edge_max = s2(0.0);
    }

    rep.x1_edge_value = surrogate_H({0.0, 1.0, 0.5});

    const auto s5 = [](double x) { return surrogate_H({0.0, x, 0.0}); };
    std::tie(rep.h0x0_argmax, rep.h0x0_max) = golden_max(s5, 0.0, 1.0);

    // x = 0 face: dH/dy = 0 pins y1(p) = 7p^3/(3(17p^2 - 32)), admissible
    // (inside (0,1)) only above the threshold root of 7p^3 - 51p^2 + 96.
    rep.y1_threshold =
        solve_monotone([](double p) { return 7.0 * p * p * p - 51.0 * p * p + 96.0; }, 0.0,
                       1.0, 2.0);
    const auto dHdp_on_y1 = [](double p) {
        const double y = 7.0 * p * p * p / (3.0 * (17.0 * p * p - 32.0));
        const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p5 = p4 * p;
        return 864.0 * p - 432.0 * p3 + 49.0 * p5 + 672.0 * p2 * y - 280.0 * p4 * y -
               2400.0 * p * y * y + 816.0 * p3 * y * y;
    };
    rep.x0_face_critical_p = solve_monotone(dHdp_on_y1, 0.0, 1.0, 1.3);
    rep.x0_face_interior_critical = rep.x0_face_critical_p > rep.y1_threshold;

    // y = 1 face: grid plus coordinate-wise golden refinement.  This face
    // carries the true maximum of the majorant (about 0.1166457 at
    // p ~ 1.2031, x ~ 0.7072), above the 1/9 attained by the class.
    double bp = 0.0, bx = 0.0, bv = -1.0;
    for (int i = 0; i <= 400; ++i)
        for (int j = 0; j <= 400; ++j) {
            const double v = surrogate_H({2.0 * i / 400.0, j / 400.0, 1.0});
            if (v > bv) {
                bv = v;
                bp = 2.0 * i / 400.0;
                bx = j / 400.0;
            }
        }
    for (int it = 0; it < 40; ++it) {
        const double xx = bx;
        const auto [np_, vp] = golden_max(
            [xx](double p) { return surrogate_H({p, xx, 1.0}); },
            std::max(0.0, bp - 0.01), std::min(2.0, bp + 0.01));
        if (vp > bv) {
            bv = vp;
            bp = np_;
        }
        const double pp = bp;
        const auto [nx, vx] = golden_max(
            [pp](double x) { return surrogate_H({pp, x, 1.0}); },
            std::max(0.0, bx - 0.01), std::min(1.0, bx + 0.01));
        if (vx > bv) {
            bv = vx;
            bx = nx;
        }
    }
    rep.y1_face_max = bv;
    rep.y1_face_argmax_p = bp;
    rep.y1_face_argmax_x = bx;

    return rep;
}

SurrogateMax maximize_surrogate(int grid_n, int refine_iters) {
    if (grid_n < 41) throw std::invalid_argument("maximize_surrogate: need grid_n >= 41");
    if (refine_iters < 0) throw std::invalid_argument("maximize_surrogate: negative refinement");

    SurrogateMax best;
    best.value = -1.0;
    const int n = grid_n - 1;
    for (int i = 0; i <= n; ++i) {
        const double p = 2.0 * i / n;
        for (int j = 0; j <= n; ++j) {
            const double x = static_cast<double>(j) / n;
            for (int k = 0; k <= n; ++k) {
                const double y = static_cast<double>(k) / n;
                const double v = surrogate_H({p, x, y});
                ++best.evaluations;
                if (v > best.value) {  // strict: ties keep the lexicographically first point
                    best.value = v;
                    best.argmax = {p, x, y};
                }
            }
        }
    }

    // Coordinate-wise golden-section refinement inside the best point's
    // grid cell neighbourhood; only improvements are accepted.
    const double hp = 2.0 / n, hx = 1.0 / n;
    const auto counted = [&best](double p, double x, double y) {
        ++best.evaluations;
        return surrogate_H({p, x, y});
    };
    for (int it = 0; it < refine_iters; ++it) {
        CuboidPoint q = best.argmax;
        {
            const auto [p, v] = golden_max(
                [&](double p) { return counted(p, q.x, q.y); },
                std::max(0.0, q.p - hp), std::min(2.0, q.p + hp));
            if (v > best.value) {
                best.value = v;
                best.argmax.p = p;
            }
        }
        q = best.argmax;
        {
            const auto [x, v] = golden_max(
                [&](double x) { return counted(q.p, x, q.y); },
                std::max(0.0, q.x - hx), std::min(1.0, q.x + hx));
            if (v > best.value) {
                best.value = v;
                best.argmax.x = x;
            }
        }
        q = best.argmax;
        {
            const auto [y, v] = golden_max(
                [&](double y) { return counted(q.p, q.x, y); },
                std::max(0.0, q.y - hx), std::min(1.0, q.y + hx));
            if (v > best.value) {
                best.value = v;
                best.argmax.y = y;
            }
        }
    }
    return best;
}

const char* target_name(Target t) {
    switch (t) {
        case Target::a4: return "a4";
        case Target::a5: return "a5";
        case Target::fekete_szego: return "FS";
        case Target::h2: return "H2";
        case Target::h3: return "H3";
    }
    throw std::invalid_argument("target_name: unknown target");
}

Target target_from_name(const std::string& name) {
    if (name == "a4") return Target::a4;
    if (name == "a5") return Target::a5;
    if (name == "FS" || name == "fs") return Target::fekete_szego;
    if (name == "H2" || name == "h2") return Target::h2;
    if (name == "H3" || name == "h3") return Target::h3;
    throw std::invalid_argument("unknown functional: " + name);
}

double target_bound(Target t) {
    switch (t) {
        case Target::a4: return 1.0 / 3.0;
        case Target::a5: return 323.0 / 528.0;
        case Target::fekete_szego: return 1.0 / 3.0;
        case Target::h2: return 0.25;
        case Target::h3: return 1.0 / 9.0;
    }
    throw std::invalid_argument("target_bound: unknown target");
}

namespace {

double objective(Target t, const CaratheodoryPoint& c) {
    const PCoeffs p = p_from_params(c);
    const CoeffVector a = coeffs_from_p(p);
    switch (t) {
        case Target::a4: return std::abs(a.a4);
        case Target::a5: return std::abs(a.a5);
        case Target::fekete_szego: return std::abs(a.a2 * a.a3 - a.a4);
        case Target::h2: return std::abs(a.a2 * a.a4 - a.a3 * a.a3);
        case Target::h3: return std::abs(functionals(a).h3);
    }
    return 0.0;
}

// Coordinates: (p1, |gamma|, arg gamma, |eta|, arg eta, |rho|, arg rho).
// Moduli clamp to their boxes; phases wrap.
using Params = std::array<double, 7>;

CaratheodoryPoint to_point(const Params& v) {
    CaratheodoryPoint c;
    c.p1 = v[0];
    c.gamma = std::polar(v[1], v[2]);
    c.eta = std::polar(v[3], v[4]);
    c.rho = std::polar(v[5], v[6]);
    return c;
}

constexpr std::array<double, 7> low = {0, 0, 0, 0, 0, 0, 0};
constexpr std::array<double, 7> high = {2, 1, 2 * pi, 1, 2 * pi, 1, 2 * pi};
constexpr std::array<bool, 7> wraps = {false, false, true, false, true, false, true};

}  // namespace

SearchResult maximize_functional(Target target, int starts, std::uint64_t seed) {
    if (starts < 1) throw std::invalid_argument("maximize_functional: need starts >= 1");
    std::mt19937_64 rng(seed);

    SearchResult best;
    best.value = -1.0;
    for (int s = 0; s < starts; ++s) {
        Params v;
        for (int i = 0; i < 7; ++i) v[i] = low[i] + (high[i] - low[i]) * next_unit(rng);
        double val = objective(target, to_point(v));
        ++best.evaluations;

        Params step;
        for (int i = 0; i < 7; ++i) step[i] = 0.25 * (high[i] - low[i]);
        while (*std::max_element(step.begin(), step.end()) > 1e-10) {
            bool improved = false;
            for (int i = 0; i < 7; ++i) {
                for (double dir : {+1.0, -1.0}) {
                    Params w = v;
                    double x = w[i] + dir * step[i];
                    if (wraps[i]) {
                        x = std::fmod(x, high[i]);
                        if (x < 0.0) x += high[i];
                    } else {
                        x = std::clamp(x, low[i], high[i]);
                    }
                    if (x == w[i]) continue;
                    w[i] = x;
                    const double cand = objective(target, to_point(w));
                    ++best.evaluations;
                    if (cand > val) {
                        val = cand;
                        v = w;
                        improved = true;
                    }
                }
            }
            if (!improved)
                for (double& st : step) st *= 0.5;
        }
        if (val > best.value) {
            best.value = val;
            best.argmax = to_point(v);
        }
    }
    return best;
}

LemmaReport lemma_suite(long samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("lemma_suite: need samples >= 1");
    std::mt19937_64 rng(seed);
    LemmaReport rep;
    rep.samples = samples;

    constexpr double slack = 1e-9;
    for (long s = 0; s < samples; ++s) {
        const CaratheodoryPoint c = random_point(rng);
        const PCoeffs p = p_from_params(c);

        const C P = p.p1 * p.p1 * p.p1 * p.p1 - 3.0 * p.p1 * p.p1 * p.p2 + p.p2 * p.p2 +
                    2.0 * p.p1 * p.p3 - p.p4;
        const C Q = p.p3 - 2.0 * p.p1 * p.p2 + p.p1 * p.p1 * p.p1;
        const double beta = 0.5 * (s % 1000 + 1) / 1000.0;  // (0, 1/2]
        const double use_val =
            std::abs(p.p2 - beta * p.p1 * p.p1) + beta * std::norm(p.p1);

        rep.max_p_value = std::max(rep.max_p_value, std::abs(P));
        rep.max_q_value = std::max(rep.max_q_value, std::abs(Q));
        rep.max_use_value = std::max(rep.max_use_value, use_val);
        if (std::abs(P) > 2.0 + slack) ++rep.p_violations;
        if (std::abs(Q) > 2.0 + slack) ++rep.q_violations;
        if (use_val > 2.0 + slack) ++rep.use_violations;

        const CoeffVector a = coeffs_from_p(p);
        if (std::abs(a.a2) > 1.0 + slack || std::abs(a.a3) > 0.5 + slack ||
            std::abs(a.a4) > 1.0 / 3.0 + slack ||
            std::abs(a.a5) > 323.0 / 528.0 + slack)
            ++rep.coeff_violations;
    }

    // max_{0<=t<=4} (A t^2 + B t + C), closed form vs brute force.
    rep.quad_samples = std::max<long>(200, samples / 500);
    for (long s = 0; s < rep.quad_samples; ++s) {
        const double A = 4.0 * next_unit(rng) - 2.0;
        const double B = 4.0 * next_unit(rng) - 2.0;
        const double Cc = 4.0 * next_unit(rng) - 2.0;

        double closed;
        if (B <= 0.0 && A <= -B / 4.0)
            closed = Cc;
        else if ((B >= 0.0 && A >= -B / 8.0) || (B <= 0.0 && A >= -B / 4.0))
            closed = 16.0 * A + 4.0 * B + Cc;
        else
            closed = (4.0 * A * Cc - B * B) / (4.0 * A);

        double brute = -1e300;
        constexpr int grid = 100000;
        for (int i = 0; i <= grid; ++i) {
            const double t = 4.0 * i / grid;
            brute = std::max(brute, (A * t + B) * t + Cc);
        }
        rep.max_quad_error = std::max(rep.max_quad_error, std::abs(closed - brute));
    }
    return rep;
}

}  // namespace arcstar
