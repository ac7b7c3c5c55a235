#include "arcstar/classes.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace arcstar {

namespace {

using C = std::complex<double>;

std::vector<ClassDescriptor> make_catalog() {
    std::vector<ClassDescriptor> v;
    v.push_back({Family::lemniscate, "S*_L", "L",
                 [](C z) { return std::sqrt(1.0 + z); },
                 std::sqrt(2.0) - 1.0,
                 [](double r) { return 1.0 - std::sqrt(1.0 - r); }});
    v.push_back({Family::cardioid, "S*_C", "C",
                 [](C z) { return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0; },
                 2.0 / 3.0,
                 [](double r) { return 4.0 * r / 3.0 + 2.0 * r * r / 3.0; }});
    v.push_back({Family::exponential, "S*_e", "e",
                 [](C z) { return std::exp(z); },
                 1.0 - 1.0 / std::exp(1.0),
                 [](double r) { return std::expm1(r); }});
    v.push_back({Family::sigmoid, "S*_SG", "SG",
                 [](C z) { return 2.0 / (1.0 + std::exp(-z)); },
                 (std::exp(1.0) - 1.0) / (std::exp(1.0) + 1.0),
                 // psi - 1 = tanh(z/2); on |z| = r the modulus peaks on the
                 // imaginary axis at |tanh(ir/2)| = tan(r/2), not at tanh(r/2)
                 [](double r) { return std::tan(0.5 * r); }});
    v.push_back({Family::wp, "S*_wp", "wp",
                 [](C z) { return 1.0 + z * std::exp(z); },
                 1.0 / std::exp(1.0),
                 [](double r) { return r * std::exp(r); }});
    v.push_back({Family::crescent, "Delta*", "crescent",
                 [](C z) { return z + std::sqrt(1.0 + z * z); },
                 2.0 - std::sqrt(2.0),
                 [](double r) { return r + std::hypot(1.0, r) - 1.0; }});
    return v;
}

}  // namespace

const std::vector<ClassDescriptor>& comparison_classes() {
    static const std::vector<ClassDescriptor> catalog = make_catalog();
    return catalog;
}

const ClassDescriptor& comparison_class(Family f) {
    for (const auto& c : comparison_classes())
        if (c.family == f) return c;
    throw std::invalid_argument("comparison_class: unknown family");
}

}  // namespace arcstar
