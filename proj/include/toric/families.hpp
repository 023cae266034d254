#pragma once

// Constructors for the explicit toric metric families: the general
// constant-angle metric, its axisymmetric specialization, the affine-q
// Einstein family, Schwarzschild- and Plebanski-Demianski-type Einstein
// metrics, the two conformally cylindrical soliton families, and products of
// surfaces. Each builder returns a MetricField over a declared validity box
// and spot-checks positivity of q, A, B on a sample grid at construction.

#include <array>
#include <vector>

#include "toric/expression.hpp"
#include "toric/fields.hpp"
#include "toric/tensor.hpp"

namespace toric {

// The metric data (⁎): conformal factor q(x, y) > 0, fiber profiles A(x) > 0
// and B(y) > 0, and the constant fiber angle θ ∈ (0, π/2]. θ = π/2 is the
// orthogonal (axisymmetric) case and makes the s/t cross term identically
// zero, not merely numerically small.
struct ToricMetricSpec {
    ScalarField2 q;
    Profile1 A;
    Profile1 B;
    double theta = 1.5707963267948966;  // pi/2
    Box domain{0.5, 1.5, 0.5, 1.5};
};

// A(x) = a + b·x + c·x² + ... (coefficients in ascending degree).
Profile1 polynomial_profile(std::vector<double> coefficients);

// q = a·x + b·y + c.
ScalarField2 affine_field(double a, double b, double c);

// Metric components: g_xx = 1/(q²A), g_yy = 1/(q²B), g_ss = A/q²,
// g_tt = B/q², g_st = √(AB)·cosθ/q², all other off-diagonals zero.
MetricField build_general(const ToricMetricSpec& spec);

// Same with θ = π/2 enforced (g_st never set).
MetricField build_axisymmetric(const ToricMetricSpec& spec);

// The base factor (1/q²)(dx²/A + dy²/B), padded with a flat unit fiber block
// so the 4x4 engine applies; base curvature reads off the (x, y) block.
MetricField base_block(const ToricMetricSpec& spec);

// Max over the grid of |x·qx + y·qy − q| (Euler's identity for degree-1
// homogeneity).
double check_homogeneous_degree1(const ScalarField2& q,
                                 const std::vector<Point2>& grid);

struct EinsteinParams {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double A = 1.0;
    double B = 1.0;
    double theta = 1.5707963267948966;
    Box domain{0.5, 1.5, 0.5, 1.5};
};

struct EinsteinBuild {
    MetricField metric;
    double expected_lambda;
};

// q = ax + by + c with constant profiles; the Einstein constant is
// −3(a²A + b²B).
EinsteinBuild build_einstein(const EinsteinParams& params);
ToricMetricSpec einstein_spec(const EinsteinParams& params);

struct SchwarzschildParams {
    // A(x) cubic and B(y) quadratic, coefficients in ascending degree.
    std::array<double, 4> a{0.0, 0.0, 1.0, 0.0};
    std::array<double, 3> b{1.0, 0.0, -1.0};
    Box domain{0.5, 1.5, -0.5, 0.5};

    // The verified instance A = x² − 2m·x³, B = 1 − y².
    static SchwarzschildParams instance(double m);
};

// q = x, θ = π/2. Arbitrary coefficients are accepted; whether the result is
// Einstein is decided downstream by residuals, never assumed here.
MetricField build_schwarzschild(const SchwarzschildParams& params);
ToricMetricSpec schwarzschild_spec(const SchwarzschildParams& params);

struct PDParams {
    double a0 = 1.0;
    double b0 = 1.0;
    std::array<double, 4> p{};  // P(z), ascending degree
    int sign = +1;              // q = x + y for +1, q = x − y for −1
    Box domain{0.3, 0.9, 0.3, 0.9};
};

// q = x ± y, A = a0 − P(x), B = b0 + P(y), θ = π/2.
MetricField build_plebanski_demianski(const PDParams& params);
ToricMetricSpec plebanski_demianski_spec(const PDParams& params);

// t ↦ c·t² + k·t^e with e = 2α²/(2α−1) + 1. Integral exponents evaluate for
// any base; fractional ones require t > 0. α = 1/2 is excluded.
Profile1 F_profile(double alpha, double c, double k);

struct CaseVParams {
    double alpha = 1.0;  // anything but 1/2
    double c = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    Box domain{0.5, 1.5, 0.5, 1.5};
};

// q = x^α y^{1−α} (homogeneous of degree one), A = F_{α,c,k1},
// B = F_{1−α,−c,k2}, θ = π/2, on x, y > 0.
MetricField build_case_v(const CaseVParams& params);
ToricMetricSpec case_v_spec(const CaseVParams& params);

struct CaseIVParams {
    double a0 = 4.0;
    double b0 = 1.0;
    Profile1 f;  // profile in z = x/y
    double lambda = 0.0;
    Box domain{0.9, 1.1, 0.95, 1.05};
};

// q = y·f(x/y) (homogeneous of degree one), A = a0 − x², B = b0 + y²,
// θ = π/2.
MetricField build_case_iv(const CaseIVParams& params);
ToricMetricSpec case_iv_spec(const CaseIVParams& params);

struct ProductSurfaceParams {
    Analytic f_kind = Analytic::cosh;  // one of cosh, sinh, sin
    double A = 1.0;
    double B = 1.0;
    bool swap_xy = false;
    Box domain{0.3, 1.3, -0.5, 0.5};
};

// q = f(x) independent of y (or f(y) when swap_xy), constant A, B, θ = π/2.
MetricField build_product_surface(const ProductSurfaceParams& params);
ToricMetricSpec product_surface_spec(const ProductSurfaceParams& params);

}  // namespace toric
