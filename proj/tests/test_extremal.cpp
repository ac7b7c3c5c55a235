#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "arcstar/extremal.hpp"
#include "arcstar/power_series.hpp"
#include "arcstar/quadrature.hpp"

using namespace arcstar;
using C = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

TEST_CASE("structure-map extremal coefficients") {
    const ExtremalFunction t = build_from_psi(PowerSeries::arctan(48));
    CHECK(t.f[0] == 0.0);
    CHECK(t.f[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t.f[2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(t.f[3] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(t.f[4] == doctest::Approx(1.0 / 18.0).epsilon(1e-12));
    CHECK(t.f[5] == doctest::Approx(-5.0 / 72.0).epsilon(1e-12));
    CHECK(t.f[6] == doctest::Approx(-13.0 / 1800.0).epsilon(1e-12));
    // degrees 7..10 frozen from an independent symbolic expansion
    CHECK(t.f[7] == doctest::Approx(941.0 / 32400.0).epsilon(1e-12));
    CHECK(t.f[8] == doctest::Approx(2117.0 / 1587600.0).epsilon(1e-11));
    CHECK(t.f[9] == doctest::Approx(-203221.0 / 12700800.0).epsilon(1e-12));
    CHECK(t.f[10] == doctest::Approx(853.0 / 68584320.0).epsilon(1e-9));

    // log-derivative equals 1 + arctan z coefficient-wise
    const PowerSeries at = PowerSeries::arctan(48);
    for (int k = 0; k <= 48; ++k) {
        const double want = (k == 0 ? 1.0 : 0.0) + at[k];
        CHECK(t.logderiv[k] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("other structure maps") {
    // psi - 1 = z/2 gives z e^{z/2}
    const ExtremalFunction h = build_from_psi(PowerSeries::identity(20) * 0.5);
    double factorial = 1.0;
    for (int k = 0; k <= 12; ++k) {
        CHECK(h.f[k + 1] == doctest::Approx(std::pow(0.5, k) / factorial).epsilon(1e-13));
        factorial *= (k + 1);
    }

    // psi - 1 = 0 gives the identity function
    const ExtremalFunction id = build_from_psi(PowerSeries(8));
    CHECK(id.f[1] == 1.0);
    for (int k = 2; k <= 8; ++k) CHECK(id.f[k] == 0.0);

    CHECK_THROWS_AS(build_from_psi(PowerSeries::constant(8, 0.5)), std::domain_error);
}

TEST_CASE("coefficient extremal family") {
    const ExtremalFunction f4 = build_f_n(4, 30);
    CHECK(f4.f[1] == 1.0);
    CHECK(f4.f[2] == 0.0);
    CHECK(f4.f[3] == 0.0);
    CHECK(f4.f[4] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(f4.f[5] == doctest::Approx(0.0));
    CHECK(f4.f[7] == doctest::Approx(1.0 / 18.0).epsilon(1e-13));

    const ExtremalFunction f3 = build_f_n(3, 30);
    CHECK(f3.f[3] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(f3.f[5] == doctest::Approx(1.0 / 8.0).epsilon(1e-13));

    const ExtremalFunction f2 = build_f_n(2, 30);
    CHECK(f2.f[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f2.f[6] == doctest::Approx(-13.0 / 1800.0).epsilon(1e-12));

    for (int n = 2; n <= 7; ++n) {
        const ExtremalFunction fn = build_f_n(n, 30);
        CHECK(fn.f[n] == doctest::Approx(1.0 / (n - 1)).epsilon(1e-14));
        for (int k = 2; k < n; ++k) CHECK(fn.f[k] == 0.0);
    }

    CHECK_THROWS_AS(build_f_n(1, 30), std::invalid_argument);
}

TEST_CASE("growth bounds") {
    // r -> 0: both bounds collapse to r
    const auto tiny = growth_bounds(1e-8);
    CHECK(tiny.first == doctest::Approx(1e-8).epsilon(1e-7));
    CHECK(tiny.second == doctest::Approx(1e-8).epsilon(1e-7));

    const auto [lo5, hi5] = growth_bounds(0.5);
    CHECK(lo5 == doctest::Approx(0.30716520814631538).epsilon(1e-11));
    CHECK(hi5 == doctest::Approx(0.81389426070974402).epsilon(1e-11));

    const auto [lo9, hi9] = growth_bounds(0.9);
    CHECK(lo9 == doctest::Approx(0.39010131116192809).epsilon(1e-10));
    CHECK(hi9 == doctest::Approx(2.0763836901429310).epsilon(1e-10));

    double prev_lo = 0.0, prev_hi = 0.0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 0.97}) {
        const auto [lo, hi] = growth_bounds(r);
        CHECK(lo <= hi);
        CHECK(lo > prev_lo);
        CHECK(hi > prev_hi);
        prev_lo = lo;
        prev_hi = hi;
    }

    CHECK_THROWS_AS(growth_bounds(0.0), std::domain_error);
    CHECK_THROWS_AS(growth_bounds(1.0), std::domain_error);
}

TEST_CASE("growth bounds dominate sample members on circles") {
    const auto [lo, hi] = growth_bounds(0.9);
    const auto f1 = [](C z) { return z * std::exp(0.5 * z); };
    const auto f2 = [](C z) { return z * std::exp(8.5 * (std::exp(z / 17.0) - 1.0)); };
    const auto f3 = [](C z) { return z * std::exp(0.25 * (1.0 - std::cos(z))); };
    for (int k = 0; k < 512; ++k) {
        const C z = std::polar(0.9, 2.0 * pi * k / 512);
        for (const auto& f : {f1(z), f2(z), f3(z)}) {
            CHECK(std::abs(f) <= hi + 1e-12);
            CHECK(std::abs(f) >= lo - 1e-12);
        }
    }
}

TEST_CASE("subordination consequence |f(z)/z| <= T(r)/r on circles") {
    const double r = 0.9;
    const double bound = growth_bounds(r).second / r;
    const auto f1 = [](C z) { return std::exp(0.5 * z); };
    const auto f2 = [](C z) { return std::exp(8.5 * (std::exp(z / 17.0) - 1.0)); };
    for (int k = 0; k < 512; ++k) {
        const C z = std::polar(r, 2.0 * pi * k / 512);
        CHECK(std::abs(f1(z)) <= bound + 1e-12);
        CHECK(std::abs(f2(z)) <= bound + 1e-12);
    }
}

TEST_CASE("covering radius") {
    const double cov = covering_radius();

    // independent oracle: Catalan's constant by its series
    double catalan = 0.0, sign = 1.0;
    for (long k = 0; k < 400000; ++k) {
        const double d = 2.0 * k + 1.0;
        catalan += sign / (d * d);
        sign = -sign;
    }
    CHECK(cov == doctest::Approx(std::exp(-catalan)).epsilon(1e-10));
    CHECK(cov == doctest::Approx(0.40013007622397045).epsilon(1e-10));
    CHECK(cov > 1.0 - pi / 4.0);
    CHECK(cov < 1.0);

    // the covering radius is the monotone limit of the lower growth bound
    double prev = 0.0;
    for (double r : {0.9, 0.99, 0.999, 0.999999}) {
        const double lo = growth_bounds(r).first;
        CHECK(lo > prev);
        CHECK(lo < cov);
        prev = lo;
    }
    CHECK(cov - prev < 1e-6);
}

TEST_CASE("rotation bound") {
    // series oracle at theta = pi/2: sum r^(2k+1)/(2k+1)^2
    const double r = 0.5;
    double oracle = 0.0;
    double pw = r;
    for (int k = 0; k < 40; ++k) {
        const double d = 2.0 * k + 1.0;
        oracle += pw / (d * d);
        pw *= r * r;
    }
    CHECK(oracle == doctest::Approx(0.51532736669432935).epsilon(1e-14));

    const double rot = rotation_bound(0.5);
    CHECK(rot == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(std::abs(rotation_bound(0.5, 16384) - rot) <= 1e-8);  // grid-doubling stability

    CHECK(rotation_bound(1e-6) <= 2e-6);

    // dominates |arg(f(z)/z)| for the z e^{z/2} member
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const C z = std::polar(0.5, 2.0 * pi * unit(rng));
        CHECK(std::abs(std::arg(std::exp(0.5 * z))) <= rot + 1e-12);
    }

    // quadrature route (r > 0.95) stays consistent with the series route
    const double rot96 = rotation_bound(0.96, 512);
    CHECK(rot96 > rotation_bound(0.95, 512));
    CHECK(rot96 < pi * pi / 8.0);
}

TEST_CASE("membership checks") {
    const std::vector<double> radii = {0.5, 0.9, 0.99};

    const ExtremalFunction t = build_f_n(2, 256);
    const SampleReport rep = membership_check(t, radii);
    CHECK(rep.pass);
    // margin approaches 0 from above as the sampling radius grows
    const SampleReport rep5 = membership_check(t, std::vector<double>{0.5});
    const SampleReport rep9 = membership_check(t, std::vector<double>{0.9});
    CHECK(rep5.worst_margin > rep9.worst_margin);
    CHECK(rep9.worst_margin > rep.worst_margin);
    CHECK(rep.worst_margin > 0.0);
    // truncation bound at order 256: tail of the arctan series at 0.99
    // is below 0.99^257/257 ~ 3e-4
    CHECK(std::abs(rep.worst_margin - (pi / 4.0 - std::atan(0.99))) <= 3e-4);

    // Table row 2: z exp((17/2)(e^{z/17}-1))
    PowerSeries psi2 = exp(PowerSeries::identity(48) * (1.0 / 17.0));
    psi2 = psi2 * PowerSeries::identity(48) * 0.5;  // z e^{z/17} / 2
    const ExtremalFunction f2 = build_from_psi(psi2, "table row 2");
    CHECK(membership_check(f2, radii).pass);

    // Koebe: psi - 1 = 2z/(1-z), log-derivative (1+z)/(1-z) leaves the strip
    const int n = 48;
    const PowerSeries koebe_psi =
        div(PowerSeries::identity(n) * 2.0,
            PowerSeries::constant(n, 1.0) - PowerSeries::identity(n));
    const ExtremalFunction koebe = build_from_psi(koebe_psi, "koebe");
    for (int k = 1; k <= 10; ++k) CHECK(koebe.f[k] == doctest::Approx(k).epsilon(1e-12));
    CHECK_FALSE(membership_check(koebe, radii).pass);
}
