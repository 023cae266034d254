#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "toric/families.hpp"
#include "toric/tensor.hpp"

using namespace toric;

namespace {

constexpr double pi = 3.141592653589793;

std::vector<Point2> sample_grid(const Box& box, int n) {
    std::vector<Point2> pts;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            pts.push_back({box.x_min + (box.x_max - box.x_min) * i / (n - 1.0),
                           box.y_min + (box.y_max - box.y_min) * j / (n - 1.0)});
        }
    }
    return pts;
}

void check_metrics_equal(const MetricField& L, const MetricField& R, Point2 p,
                         double tol) {
    TensorValue gl = metric_at(L, p);
    TensorValue gr = metric_at(R, p);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(gl.at(i, j) - gr.at(i, j)) <= tol);
        }
    }
}

void check_lambda_identity(const MetricField& M, Point2 p, double lambda,
                           double tol) {
    TensorValue lam = lambda_tensor(M, BaseVectorField::zero(), p);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double want = (i == j) ? lambda : 0.0;
            CHECK(std::abs(lam.at(i, j) - want) <= tol);
        }
    }
}

}  // namespace

TEST_CASE("polynomial profile carries exact derivatives") {
    Profile1 p = polynomial_profile({1.0, 2.0, 3.0});
    Jet1 v = p(2.0);
    CHECK(v.value == 17.0);
    CHECK(v.d1 == 14.0);
    CHECK(v.d2 == 6.0);
    CHECK(v.d3 == 0.0);

    Profile1 cubic = polynomial_profile({0.0, 0.0, 0.0, 1.0});
    Jet1 w = cubic(-1.5);
    CHECK(w.value == -3.375);
    CHECK(w.d1 == 6.75);
    CHECK(w.d2 == -9.0);
    CHECK(w.d3 == 6.0);
}

TEST_CASE("affine field carries exact derivatives") {
    ScalarField2 q = affine_field(2.0, -1.0, 0.5);
    Jet2 v = q(1.0, 2.0);
    CHECK(v.value == 0.5);
    CHECK(v.d10 == 2.0);
    CHECK(v.d01 == -1.0);
    CHECK(v.d20 == 0.0);
    CHECK(v.d11 == 0.0);
    CHECK(v.d02 == 0.0);
}

TEST_CASE("orthogonal angle and the axisymmetric builder agree exactly") {
    ToricMetricSpec spec;
    spec.q = affine_field(0.4, 0.7, 1.0);
    spec.A = polynomial_profile({1.0, 0.2, 0.1});
    spec.B = polynomial_profile({2.0, -0.1});
    spec.theta = pi / 2.0;
    MetricField G = build_general(spec);
    MetricField X = build_axisymmetric(spec);
    for (Point2 p : sample_grid(spec.domain, 4)) {
        TensorValue gg = metric_at(G, p);
        TensorValue gx = metric_at(X, p);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                CHECK(gg.at(i, j) == gx.at(i, j));
            }
        }
        CHECK(gg.at(2, 3) == 0.0);
    }

    spec.theta = pi / 3.0;
    CHECK_THROWS_AS(build_axisymmetric(spec), std::invalid_argument);
}

TEST_CASE("base block matches the full metric on the base and is flat on the fiber") {
    ToricMetricSpec spec;
    spec.q = affine_field(0.5, 0.5, 0.8);
    spec.A = polynomial_profile({1.5, 0.3});
    spec.B = polynomial_profile({0.9, 0.0, 0.2});
    MetricField full = build_general(spec);
    MetricField base = base_block(spec);
    Point2 p{1.1, 0.7};
    TensorValue gf = metric_at(full, p);
    TensorValue gb = metric_at(base, p);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(gb.at(i, j) == gf.at(i, j));
        }
    }
    CHECK(gb.at(2, 2) == 1.0);
    CHECK(gb.at(3, 3) == 1.0);
    CHECK(gb.at(2, 3) == 0.0);

    // The flat fiber block generates no mixed connection components.
    TensorValue gam = christoffel(base, p);
    for (int k = 2; k < 4; ++k) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                CHECK(gam.at(k, i, j) == 0.0);
            }
        }
    }
}

TEST_CASE("degree-one homogeneity detector") {
    std::vector<Point2> grid = sample_grid(Box{0.5, 1.5, 0.5, 1.5}, 5);
    CHECK(check_homogeneous_degree1(affine_field(1.0, 2.0, 0.0), grid) ==
          0.0);
    // A constant offset breaks the Euler identity by exactly that constant.
    CHECK(check_homogeneous_degree1(affine_field(1.0, 0.0, 1.0), grid) ==
          1.0);
}

TEST_CASE("affine-family builder: constants and consistency") {
    EinsteinParams params;
    params.a = 1.0;
    params.b = 0.0;
    params.c = 0.0;
    CHECK(build_einstein(params).expected_lambda == -3.0);

    params.b = 1.0;
    params.c = 1.0;
    params.A = 2.0;
    params.B = 3.0;
    EinsteinBuild built = build_einstein(params);
    CHECK(built.expected_lambda == -15.0);
    check_metrics_equal(built.metric, build_general(einstein_spec(params)),
                        {1.2, 0.8}, 0.0);

    // Constant q is the flat cylinder-type case.
    params.a = 0.0;
    params.b = 0.0;
    params.c = 1.0;
    EinsteinBuild flat = build_einstein(params);
    CHECK(flat.expected_lambda == 0.0);
    CHECK(ricci(flat.metric, {1.0, 1.0}).max_abs() == 0.0);
}

TEST_CASE("quartic-profile instance is Ricci-flat with nonzero Weyl") {
    SchwarzschildParams params = SchwarzschildParams::instance(0.1);
    CHECK(params.a[0] == 0.0);
    CHECK(params.a[1] == 0.0);
    CHECK(params.a[2] == 1.0);
    CHECK(std::abs(params.a[3] + 0.2) <= 1e-15);
    CHECK(params.b[0] == 1.0);
    CHECK(params.b[2] == -1.0);

    MetricField M = build_schwarzschild(params);
    for (Point2 p : {Point2{0.7, -0.3}, Point2{1.0, 0.0}, Point2{1.4, 0.35}}) {
        CHECK(ricci(M, p).max_abs() <= 1e-9);
        CHECK(std::abs(scalar_curvature(M, p)) <= 1e-9);
    }
    CHECK(weyl(M, {1.0, 0.0}).max_abs() > 1e-3);

    // Spot value: at (1, 0), A = 1 − 0.2 = 0.8, B = 1, q = 1.
    TensorValue g = metric_at(M, {1.0, 0.0});
    CHECK(std::abs(g.at(0, 0) - 1.25) <= 1e-15);
    CHECK(std::abs(g.at(2, 2) - 0.8) <= 1e-15);
    CHECK(g.at(1, 1) == 1.0);
    CHECK(g.at(3, 3) == 1.0);
}

TEST_CASE("constant-term profile shift is Einstein with negative constant") {
    // A = x² + 1, B = 1 − y², q = x: constant curvature −1.
    SchwarzschildParams params;
    params.a = {1.0, 0.0, 1.0, 0.0};
    params.b = {1.0, 0.0, -1.0};
    MetricField M = build_schwarzschild(params);
    for (Point2 p : {Point2{0.8, -0.2}, Point2{1.3, 0.4}}) {
        check_lambda_identity(M, p, -3.0, 1e-9);
    }
}

TEST_CASE("difference-profile family with a cubic is Einstein") {
    PDParams params;
    params.a0 = 2.0;
    params.b0 = 1.0;
    params.p = {0.0, 0.0, 0.0, 1.0};
    params.sign = -1;
    params.domain = Box{0.7, 1.0, 0.1, 0.4};
    MetricField M = build_plebanski_demianski(params);

    TensorValue g = metric_at(M, {0.8, 0.2});
    double q = 0.6;
    double A = 2.0 - 0.512;
    double B = 1.0 + 0.008;
    CHECK(std::abs(g.at(0, 0) - 1.0 / (q * q * A)) <= 1e-15);
    CHECK(std::abs(g.at(1, 1) - 1.0 / (q * q * B)) <= 1e-15);
    CHECK(std::abs(g.at(2, 2) - A / (q * q)) <= 1e-15);
    CHECK(std::abs(g.at(3, 3) - B / (q * q)) <= 1e-15);

    for (Point2 p : sample_grid(params.domain, 3)) {
        check_lambda_identity(M, p, -3.0 * (params.a0 + params.b0), 1e-8);
    }

    params.sign = +2;
    CHECK_THROWS_AS(build_plebanski_demianski(params), std::invalid_argument);

    // The sum convention changes q; spot-check the conformal factor only.
    PDParams plus;
    plus.a0 = 2.0;
    plus.b0 = 1.0;
    plus.sign = +1;
    plus.domain = Box{0.3, 0.9, 0.3, 0.9};
    TensorValue gp = metric_at(build_plebanski_demianski(plus), {0.4, 0.5});
    CHECK(std::abs(gp.at(2, 2) - 2.0 / (0.9 * 0.9)) <= 1e-14);
}

TEST_CASE("one-parameter profile map exponents") {
    // alpha = 1 gives the cubic branch.
    Profile1 f = F_profile(1.0, 0.5, 0.1);
    Jet1 v = f(2.0);
    CHECK(std::abs(v.value - 2.8) <= 1e-14);
    CHECK(std::abs(v.d1 - 3.2) <= 1e-14);

    // Integral exponents evaluate at negative arguments.
    CHECK_NOTHROW(F_profile(1.0, 0.0, 1.0)(-1.5));

    // alpha = 2 gives exponent 11/3; value at 1 is c + k, and negative
    // arguments are rejected.
    Profile1 g = F_profile(2.0, 0.3, 0.7);
    CHECK(std::abs(g(1.0).value - 1.0) <= 1e-14);
    CHECK(std::abs(g(2.0).value -
                   (0.3 * 4.0 + 0.7 * std::pow(2.0, 11.0 / 3.0))) <= 1e-13);
    CHECK_THROWS_AS(F_profile(2.0, 0.0, 1.0)(-1.0), std::domain_error);

    CHECK_THROWS_WITH_AS(F_profile(0.5, 1.0, 1.0),
                         doctest::Contains("alpha = 1/2"),
                         std::invalid_argument);
}

TEST_CASE("power-law conformal factor family") {
    CaseVParams params;
    params.alpha = 1.0;
    params.c = 0.5;
    params.k1 = 0.1;
    params.k2 = 1.0;
    MetricField M = build_case_v(params);

    // alpha = 1 collapses q to x exactly.
    ToricMetricSpec spec = case_v_spec(params);
    Jet2 qv = spec.q(1.2, 0.7);
    CHECK(std::abs(qv.value - 1.2) <= 1e-14);
    CHECK(std::abs(qv.d10 - 1.0) <= 1e-14);
    CHECK(std::abs(qv.d01) <= 1e-14);

    TensorValue g = metric_at(M, {1.0, 1.0});
    double A = 0.5 + 0.1;        // c + k1 at t = 1
    double B = -0.5 + 1.0;       // −c·t² + k2·t at t = 1
    CHECK(std::abs(g.at(0, 0) - 1.0 / A) <= 1e-13);
    CHECK(std::abs(g.at(1, 1) - 1.0 / B) <= 1e-13);

    SUBCASE("fractional exponent keeps degree-one homogeneity") {
        CaseVParams frac;
        frac.alpha = 0.7;
        frac.c = 0.4;
        frac.k1 = 0.2;
        frac.k2 = 0.3;
        ToricMetricSpec fs = case_v_spec(frac);
        CHECK(check_homogeneous_degree1(
                  fs.q, sample_grid(Box{0.6, 1.4, 0.6, 1.4}, 5)) <= 1e-10);
    }

    SUBCASE("positivity is enforced at construction") {
        CaseVParams bad;
        bad.alpha = 1.0;
        bad.c = 1.0;
        bad.k1 = 0.0;
        bad.k2 = 0.0;
        CHECK_THROWS_AS(build_case_v(bad), std::domain_error);
    }

    SUBCASE("excluded exponent and bad domains are rejected") {
        CaseVParams bad;
        bad.alpha = 0.5;
        CHECK_THROWS_AS(case_v_spec(bad), std::invalid_argument);

        CaseVParams neg;
        neg.alpha = 1.0;
        neg.c = 0.5;
        neg.domain = Box{-0.5, 1.5, 0.5, 1.5};
        CHECK_THROWS_AS(case_v_spec(neg), std::invalid_argument);
    }
}

TEST_CASE("self-similar profile family") {
    SUBCASE("constant profile is Einstein") {
        CaseIVParams params;
        params.a0 = 4.0;
        params.b0 = 1.0;
        params.f = polynomial_profile({1.3});
        MetricField M = build_case_iv(params);
        double lambda = -3.0 * params.b0 * 1.3 * 1.3;
        for (Point2 p : sample_grid(params.domain, 3)) {
            check_lambda_identity(M, p, lambda, 1e-8);
        }
    }

    SUBCASE("identity profile collapses q to x") {
        CaseIVParams params;
        params.a0 = 4.0;
        params.b0 = 1.0;
        params.f = polynomial_profile({0.0, 1.0});
        ToricMetricSpec spec = case_iv_spec(params);
        Jet2 qv = spec.q(1.05, 0.98);
        CHECK(std::abs(qv.value - 1.05) <= 1e-14);
        CHECK(std::abs(qv.d10 - 1.0) <= 1e-13);
        CHECK(std::abs(qv.d01) <= 1e-13);
        MetricField M = build_case_iv(params);
        check_lambda_identity(M, {1.0, 1.0}, -3.0 * params.a0, 1e-8);
    }

    SUBCASE("q is homogeneous of degree one for any profile") {
        CaseIVParams params;
        params.f = polynomial_profile({1.0, 1.0, 1.0});
        ToricMetricSpec spec = case_iv_spec(params);
        CHECK(check_homogeneous_degree1(
                  spec.q, sample_grid(params.domain, 5)) <= 1e-10);
    }

    SUBCASE("missing profile is rejected") {
        CaseIVParams params;
        CHECK_THROWS_AS(case_iv_spec(params), std::invalid_argument);
    }
}

TEST_CASE("surface-product builder") {
    ProductSurfaceParams params;
    params.f_kind = Analytic::cosh;
    MetricField M = build_product_surface(params);
    Point2 p{0.7, 0.3};
    TensorValue g = metric_at(M, p);
    double q = std::cosh(0.7);
    CHECK(std::abs(g.at(0, 0) - 1.0 / (q * q)) <= 1e-15);
    CHECK(std::abs(g.at(2, 2) - 1.0 / (q * q)) <= 1e-15);

    // The conformal factor must not depend on y.
    ToricMetricSpec spec = product_surface_spec(params);
    Jet2 qv = spec.q(0.7, 0.3);
    CHECK(qv.d01 == 0.0);
    CHECK(qv.d11 == 0.0);
    CHECK(qv.d02 == 0.0);

    SUBCASE("swapped variant depends on y only") {
        ProductSurfaceParams sw;
        sw.f_kind = Analytic::cosh;
        sw.swap_xy = true;
        sw.domain = Box{-0.5, 0.5, 0.3, 1.3};
        ToricMetricSpec ss = product_surface_spec(sw);
        Jet2 qw = ss.q(0.1, 0.8);
        CHECK(std::abs(qw.value - std::cosh(0.8)) <= 1e-15);
        CHECK(qw.d10 == 0.0);
    }

    SUBCASE("sin needs a domain inside its positivity window") {
        ProductSurfaceParams ps;
        ps.f_kind = Analytic::sin;
        ps.domain = Box{0.3, 2.8, -0.5, 0.5};
        CHECK_NOTHROW(build_product_surface(ps));
        ps.domain = Box{0.3, 3.6, -0.5, 0.5};
        CHECK_THROWS_AS(build_product_surface(ps), std::domain_error);
    }

    SUBCASE("unsupported profile kinds are rejected") {
        ProductSurfaceParams bad;
        bad.f_kind = Analytic::exp;
        CHECK_THROWS_AS(product_surface_spec(bad), std::invalid_argument);
    }
}

TEST_CASE("spec validation and positivity guards") {
    ToricMetricSpec spec;
    spec.A = polynomial_profile({1.0});
    spec.B = polynomial_profile({1.0});
    // Missing q.
    CHECK_THROWS_AS(build_general(spec), std::invalid_argument);

    spec.q = affine_field(0.0, 0.0, 1.0);
    spec.theta = 0.0;
    CHECK_THROWS_AS(build_general(spec), std::invalid_argument);
    spec.theta = 2.0;
    CHECK_THROWS_AS(build_general(spec), std::invalid_argument);

    spec.theta = pi / 2.0;
    spec.A = polynomial_profile({1.0, -1.0});  // negative beyond x = 1
    spec.domain = Box{0.5, 1.5, 0.5, 1.5};
    CHECK_THROWS_WITH_AS(build_general(spec), doctest::Contains("positive"),
                         std::domain_error);

    spec.A = polynomial_profile({1.0});
    spec.q = affine_field(1.0, 1.0, -1.5);  // vanishes on the diagonal
    CHECK_THROWS_WITH_AS(build_general(spec), doctest::Contains("q"),
                         std::domain_error);
}

TEST_CASE("random specs stay positive definite across their boxes") {
    toric::testing::SpecGen gen(0x5eedu);
    for (int trial = 0; trial < 10; ++trial) {
        ToricMetricSpec spec = gen.sample_spec(true);
        MetricField M = build_general(spec);
        for (Point2 p : sample_grid(spec.domain, 4)) {
            CHECK_NOTHROW(metric_at(M, p));
        }
    }
}
