#include "arcstar/power_series.hpp"

#include <stdexcept>
#include <string>

namespace arcstar {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("power series order mismatch: " +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
}

}  // namespace

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("power series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, 0.0);
}

PowerSeries::PowerSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("power series needs at least the constant term");
}

PowerSeries PowerSeries::constant(int order, double c0) {
    PowerSeries s(order);
    s.c_[0] = c0;
    return s;
}

PowerSeries PowerSeries::identity(int order) { return monomial(order, 1); }

PowerSeries PowerSeries::monomial(int order, int degree, double c) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("monomial degree outside truncation order");
    PowerSeries s(order);
    s.c_[static_cast<size_t>(degree)] = c;
    return s;
}

PowerSeries PowerSeries::arctan(int order) {
    PowerSeries s(order);
    double sign = 1.0;
    for (int k = 1; k <= order; k += 2) {
        s.c_[static_cast<size_t>(k)] = sign / k;
        sign = -sign;
    }
    return s;
}

std::complex<double> PowerSeries::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

double PowerSeries::eval(double x) const {
    double acc = 0.0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    require_same_order(*this, rhs);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    require_same_order(*this, rhs);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

PowerSeries& PowerSeries::operator*=(double s) {
    for (double& c : c_) c *= s;
    return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r = a;
    r += b;
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r = a;
    r -= b;
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (int j = 0; i + j <= n; ++j) r.coeff(i + j) += ai * b[j];
    }
    return r;
}

PowerSeries operator*(const PowerSeries& a, double s) {
    PowerSeries r = a;
    r *= s;
    return r;
}

PowerSeries operator*(double s, const PowerSeries& a) { return a * s; }

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    if (b[0] == 0.0) throw std::domain_error("series division by series with zero constant term");
    const int n = a.order();
    PowerSeries q(n);
    for (int k = 0; k <= n; ++k) {
        double acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q.coeff(k) = acc / b[0];
    }
    return q;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    require_same_order(f, g);
    if (g[0] != 0.0)
        throw std::domain_error("series composition requires g(0) == 0");
    const int n = f.order();
    PowerSeries r = PowerSeries::constant(n, f[n]);
    for (int k = n - 1; k >= 0; --k) {
        r = r * g;
        r.coeff(0) += f[k];
    }
    return r;
}

PowerSeries exp(const PowerSeries& f) {
    if (f[0] != 0.0)
        throw std::domain_error("series exp requires zero constant term");
    const int n = f.order();
    PowerSeries h(n);
    h.coeff(0) = 1.0;
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += k * f[k] * h[m - k];
        h.coeff(m) = acc / m;
    }
    return h;
}

PowerSeries integrate_over_t(const PowerSeries& f) {
    if (f[0] != 0.0)
        throw std::domain_error("integrate_over_t requires zero constant term (log singularity)");
    const int n = f.order();
    PowerSeries g(n);
    for (int k = 1; k <= n; ++k) g.coeff(k) = f[k] / k;
    return g;
}

PowerSeries derivative(const PowerSeries& f) {
    const int n = f.order();
    if (n == 0) return PowerSeries(0);
    PowerSeries d(n - 1);
    for (int k = 1; k <= n; ++k) d.coeff(k - 1) = k * f[k];
    return d;
}

}  // namespace arcstar
