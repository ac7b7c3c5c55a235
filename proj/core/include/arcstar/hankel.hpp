#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace arcstar {

/// Parameters of the standard representation of the first four moments
/// of the Caratheodory class: p1 normalized into [0,2] by rotation, and
/// gamma, eta, rho in the closed unit disk.
struct CaratheodoryPoint {
    double p1 = 0.0;
    std::complex<double> gamma;
    std::complex<double> eta;
    std::complex<double> rho;
};

/// First four Taylor coefficients of a function with positive real part.
struct PCoeffs {
    std::complex<double> p1, p2, p3, p4;
};

/// Coefficients a_2..a_5 of a strip-class member.
struct CoeffVector {
    std::complex<double> a2, a3, a4, a5;
};

/// A point of the box S = [0,2] x [0,1] x [0,1] with x = |gamma|,
/// y = |eta|.
struct CuboidPoint {
    double p = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// p2, p3, p4 from (p1, gamma, eta, rho):
///   2 p2 = p1^2 + gamma (4 - p1^2)
///   4 p3 = p1^3 + 2 p1 (4-p1^2) gamma - p1 (4-p1^2) gamma^2
///          + 2 (4-p1^2)(1-|gamma|^2) eta
///   8 p4 = p1^4 + (4-p1^2) gamma (p1^2 (gamma^2 - 3 gamma + 3) + 4 gamma)
///          - 4 (4-p1^2)(1-|gamma|^2)
///            (p1 (gamma-1) eta + conj(gamma) eta^2 - (1-|eta|^2) rho)
PCoeffs p_from_params(const CaratheodoryPoint& c);

/// a_2 = p1/2, a_3 = p2/4, a_4 = -(p1^3/6 + p1 p2/2 - 2 p3)/12,
/// a_5 = -(-5 p1^4/72 + p2^2/4 + p1 p3/3 + p1^2 p2/6 - p4)/8.
CoeffVector coeffs_from_p(const PCoeffs& p);

/// a_4 from the first three Schwarz-function coefficients:
/// 3 a_4 = w3 + (3/2) w1 w2 + w1^3/6.
std::complex<double> schwarz_a4(std::complex<double> w1, std::complex<double> w2,
                                std::complex<double> w3);

/// The coefficient functionals: fekete_szego = a2 a3 - a4,
/// h2 = a2 a4 - a3^2 (second Hankel determinant at 2), and the third
/// Hankel determinant h3 = a3(a2 a4 - a3^2) - a4(a4 - a2 a3) + a5(a3 - a2^2).
struct Functionals {
    std::complex<double> fekete_szego;
    std::complex<double> h2;
    std::complex<double> h3;
};
Functionals functionals(const CoeffVector& a);

/// H_3(1) directly as the degree-six polynomial in p1..p4 over 20736;
/// asserted against the coefficient route to 1e-12.
std::complex<double> h3_direct(const PCoeffs& p);

/// The box majorant H(p,x,y) = (h1 + h2 y + h3 y^2 + h4 (1-y^2))/82944
/// dominating |H_3(1)| at p = p1, x = |gamma|, y = |eta|.
double surrogate_H(const CuboidPoint& q);

/// Face and edge extrema of the majorant over S.
struct FaceReport {
    double p2_face_value = 0.0;        // H(2,x,y), constant 49/1296
    double p2_face_spread = 0.0;       // max deviation from that constant over a grid
    double g3_max = 0.0;               // max of H(p,1,y) (independent of y)
    double g3_argmax = 0.0;
    double s1_max = 0.0;               // max of H(p,0,0)
    double s1_argmax = 0.0;
    double p01_edge_max = 0.0;         // max of H(p,0,1), attained at p = 0
    double p01_edge_argmax = 0.0;
    double x1_edge_value = 0.0;        // H(0,1,y), constant 1/16
    double h0x0_max = 0.0;             // max of H(0,x,0)
    double h0x0_argmax = 0.0;          // sqrt(2/3)
    double x0_face_critical_p = 0.0;   // root of dH/dp on y = y1(p), x = 0
    double y1_threshold = 0.0;         // p above which y1(p) lands in (0,1)
    bool x0_face_interior_critical = true;  // whether the two overlap
    double y1_face_max = 0.0;          // max of H(p,x,1); exceeds 1/9 (see below)
    double y1_face_argmax_p = 0.0;
    double y1_face_argmax_x = 0.0;
};
FaceReport surrogate_faces();

/// Global maximization of the majorant over S: dense grid (grid_n points
/// per axis, ties to the lexicographically smallest point) followed by
/// coordinate-wise golden-section refinement around the best cell.
struct SurrogateMax {
    double value = 0.0;
    CuboidPoint argmax;
    long evaluations = 0;
};
SurrogateMax maximize_surrogate(int grid_n, int refine_iters);

enum class Target : std::uint8_t { a4, a5, fekete_szego, h2, h3 };

const char* target_name(Target t);
Target target_from_name(const std::string& name);

/// The reference sharp bound each functional is compared against:
/// 1/3, 323/528, 1/3, 1/4, 1/9 in Target order.
double target_bound(Target t);

/// Multistart coordinate search (shrinking steps, complex parameters in
/// polar form so the box constraints are exact) maximizing |functional|
/// over the parameter space.  Deterministic for a fixed seed.
struct SearchResult {
    double value = 0.0;
    CaratheodoryPoint argmax;
    long evaluations = 0;
};
SearchResult maximize_functional(Target target, int starts, std::uint64_t seed);

/// Randomized checks of the moment inequalities used by the coefficient
/// proofs, plus the boxed-quadratic maximum formula against a brute-force
/// grid.  All counts should be zero.
struct LemmaReport {
    long samples = 0;
    long p_violations = 0;    // |p1^4 - 3 p1^2 p2 + p2^2 + 2 p1 p3 - p4| <= 2
    long q_violations = 0;    // |p3 - 2 p1 p2 + p1^3| <= 2
    long use_violations = 0;  // |p2 - b p1^2| + b |p1|^2 <= 2 for b in (0, 1/2]
    long coeff_violations = 0;  // |a2|<=1, |a3|<=1/2, |a4|<=1/3, |a5|<=323/528
    double max_p_value = 0.0;
    double max_q_value = 0.0;
    double max_use_value = 0.0;
    long quad_samples = 0;
    double max_quad_error = 0.0;  // piecewise formula vs grid max of At^2+Bt+C on [0,4]
};
LemmaReport lemma_suite(long samples, std::uint64_t seed);

}  // namespace arcstar
