#pragma once

#include <complex>
#include <vector>

namespace arcstar {

/// Truncated real Taylor series with strict truncation semantics.
///
/// A series of order N stores exactly the coefficients c_0..c_N of
/// z^0..z^N.  Arithmetic never reads or writes beyond degree N, so all
/// binary operations require equal orders and return that order.  The
/// strictness keeps multiplication associative at fixed N.  Coefficients
/// are real; complex numbers enter only at evaluation points.
class PowerSeries {
public:
    /// Zero series of the given truncation order (order+1 coefficients).
    explicit PowerSeries(int order);

    /// Takes ownership of exactly order+1 coefficients, c[k] multiplying z^k.
    explicit PowerSeries(std::vector<double> coeffs);

    static PowerSeries constant(int order, double c0);
    static PowerSeries identity(int order);                        // z
    static PowerSeries monomial(int order, int degree, double c = 1.0);

    /// Maclaurin series of arctan: (-1)^k/(2k+1) at degree 2k+1.
    static PowerSeries arctan(int order);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

    double operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    double& coeff(int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<double>& coeffs() const noexcept { return c_; }

    /// Horner evaluation of the truncated polynomial.  Meaningful for
    /// |z| <= 1 (the series' validity domain); no hard bound enforced.
    std::complex<double> eval(std::complex<double> z) const;
    double eval(double x) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(double s);

private:
    std::vector<double> c_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);  // Cauchy product truncated at N
PowerSeries operator*(const PowerSeries& a, double s);
PowerSeries operator*(double s, const PowerSeries& a);

/// Quotient q with a = b*q through degree N.  Requires b(0) != 0.
PowerSeries div(const PowerSeries& a, const PowerSeries& b);

/// Taylor coefficients of f(g(z)) through degree N, by Horner over series.
/// Requires g(0) == 0 (composition of truncated series is ill-defined
/// otherwise) and equal orders.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// exp(f) for f with f(0) == 0, via the recurrence n h_n = sum_k k f_k h_{n-k}.
PowerSeries exp(const PowerSeries& f);

/// Antiderivative of f(t)/t: g_0 = 0, g_k = f_k/k.  Requires f(0) == 0
/// (a nonzero constant term would integrate to a logarithm).
PowerSeries integrate_over_t(const PowerSeries& f);

/// Derivative; the order drops by one.
PowerSeries derivative(const PowerSeries& f);

}  // namespace arcstar
