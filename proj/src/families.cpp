#include "toric/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// cos θ with the orthogonal endpoint treated exactly: the axisymmetric case
// must produce a structurally zero cross term, not one of size 1e-17.
double cos_angle(double theta) {
    return theta == half_pi ? 0.0 : std::cos(theta);
}

void require_theta_range(double theta) {
    if (!(theta > 0.0) || theta > half_pi) {
        throw std::invalid_argument("theta must lie in (0, pi/2]");
    }
}

[[noreturn]] void positivity_failure(const char* name, double value, double x,
                                     double y) {
    std::ostringstream os;
    os << name << " must be positive on the validity domain: " << name << "("
       << x << ", " << y << ") = " << value;
    throw std::domain_error(os.str());
}

// Sampled positivity gate for q, A, B at construction time. Families with
// genuine coordinate degeneracies must declare a box that avoids them.
void spot_check_positivity(const ToricMetricSpec& spec, int samples = 21) {
    const Box& b = spec.domain;
    for (int i = 0; i < samples; ++i) {
        double x = b.x_min + (b.x_max - b.x_min) * i / (samples - 1);
        double a_val = spec.A(x).value;
        if (!(a_val > 0.0)) positivity_failure("A", a_val, x, b.y_mid());
        for (int j = 0; j < samples; ++j) {
            double y = b.y_min + (b.y_max - b.y_min) * j / (samples - 1);
            if (i == 0) {
                double b_val = spec.B(y).value;
                if (!(b_val > 0.0))
                    positivity_failure("B", b_val, b.x_mid(), y);
            }
            double q_val = spec.q(x, y).value;
            if (!(q_val > 0.0)) positivity_failure("q", q_val, x, y);
        }
    }
}

ScalarField2 lift_profile_x(Profile1 A) {
    ScalarField2 f;
    f.eval = [A = std::move(A)](double x, double) {
        return compose_univariate(A(x), Jet2::variable_x(x));
    };
    return f;
}

ScalarField2 lift_profile_y(Profile1 B) {
    ScalarField2 f;
    f.eval = [B = std::move(B)](double, double y) {
        return compose_univariate(B(y), Jet2::variable_y(y));
    };
    return f;
}

}  // namespace

Profile1 polynomial_profile(std::vector<double> coefficients) {
    if (coefficients.empty()) coefficients.push_back(0.0);
    Profile1 p;
    p.eval = [c = std::move(coefficients)](double t) {
        Jet1 tj = Jet1::variable(t);
        Jet1 acc = Jet1::constant(c.back());
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            acc = acc * tj + Jet1::constant(c[i]);
        }
        return acc;
    };
    return p;
}

ScalarField2 affine_field(double a, double b, double c) {
    ScalarField2 f;
    f.eval = [a, b, c](double x, double y) {
        return a * Jet2::variable_x(x) + b * Jet2::variable_y(y) +
               Jet2::constant(c);
    };
    return f;
}

MetricField build_general(const ToricMetricSpec& spec) {
    require_theta_range(spec.theta);
    if (!spec.q || !spec.A || !spec.B) {
        throw std::invalid_argument("metric spec requires q, A, and B");
    }
    spot_check_positivity(spec);

    ScalarField2 A = lift_profile_x(spec.A);
    ScalarField2 B = lift_profile_y(spec.B);
    ScalarField2 q = spec.q;
    double cos_theta = cos_angle(spec.theta);

    MetricField M(spec.domain);

    ScalarField2 gxx;
    gxx.eval = [q, A](double x, double y) {
        Jet2 qj = q(x, y);
        return recip(qj * qj * A(x, y));
    };
    M.set_component(0, 0, gxx);

    ScalarField2 gyy;
    gyy.eval = [q, B](double x, double y) {
        Jet2 qj = q(x, y);
        return recip(qj * qj * B(x, y));
    };
    M.set_component(1, 1, gyy);

    ScalarField2 gss;
    gss.eval = [q, A](double x, double y) {
        Jet2 qj = q(x, y);
        return A(x, y) / (qj * qj);
    };
    M.set_component(2, 2, gss);

    ScalarField2 gtt;
    gtt.eval = [q, B](double x, double y) {
        Jet2 qj = q(x, y);
        return B(x, y) / (qj * qj);
    };
    M.set_component(3, 3, gtt);

    if (cos_theta != 0.0) {
        ScalarField2 gst;
        gst.eval = [q, A, B, cos_theta](double x, double y) {
            Jet2 qj = q(x, y);
            return sqrt(A(x, y) * B(x, y)) * Jet2::constant(cos_theta) /
                   (qj * qj);
        };
        M.set_component(2, 3, gst);
    }
    return M;
}

MetricField build_axisymmetric(const ToricMetricSpec& spec) {
    if (spec.theta != half_pi) {
        throw std::invalid_argument(
            "axisymmetric metric requires theta = pi/2");
    }
    return build_general(spec);
}

MetricField base_block(const ToricMetricSpec& spec) {
    require_theta_range(spec.theta);
    spot_check_positivity(spec);

    ScalarField2 A = lift_profile_x(spec.A);
    ScalarField2 B = lift_profile_y(spec.B);
    ScalarField2 q = spec.q;

    MetricField M(spec.domain);
    ScalarField2 gxx;
    gxx.eval = [q, A](double x, double y) {
        Jet2 qj = q(x, y);
        return recip(qj * qj * A(x, y));
    };
    M.set_component(0, 0, gxx);
    ScalarField2 gyy;
    gyy.eval = [q, B](double x, double y) {
        Jet2 qj = q(x, y);
        return recip(qj * qj * B(x, y));
    };
    M.set_component(1, 1, gyy);
    // Flat unit fiber block: the product has no cross curvature, so the
    // (x, y) block of any curvature output is the base factor's.
    M.set_component(2, 2, constant_field(1.0));
    M.set_component(3, 3, constant_field(1.0));
    return M;
}

double check_homogeneous_degree1(const ScalarField2& q,
                                 const std::vector<Point2>& grid) {
    double worst = 0.0;
    for (const Point2& p : grid) {
        Jet2 j = q(p.x, p.y);
        worst = std::max(worst,
                         std::abs(p.x * j.d10 + p.y * j.d01 - j.value));
    }
    return worst;
}

ToricMetricSpec einstein_spec(const EinsteinParams& params) {
    ToricMetricSpec spec;
    spec.q = affine_field(params.a, params.b, params.c);
    spec.A = constant_profile(params.A);
    spec.B = constant_profile(params.B);
    spec.theta = params.theta;
    spec.domain = params.domain;
    return spec;
}

EinsteinBuild build_einstein(const EinsteinParams& params) {
    double lambda =
        -3.0 * (params.a * params.a * params.A + params.b * params.b * params.B);
    return EinsteinBuild{build_general(einstein_spec(params)), lambda};
}

SchwarzschildParams SchwarzschildParams::instance(double m) {
    SchwarzschildParams p;
    p.a = {0.0, 0.0, 1.0, -2.0 * m};
    p.b = {1.0, 0.0, -1.0};
    return p;
}

ToricMetricSpec schwarzschild_spec(const SchwarzschildParams& params) {
    ToricMetricSpec spec;
    spec.q = affine_field(1.0, 0.0, 0.0);
    spec.A = polynomial_profile(
        {params.a[0], params.a[1], params.a[2], params.a[3]});
    spec.B = polynomial_profile({params.b[0], params.b[1], params.b[2]});
    spec.theta = half_pi;
    spec.domain = params.domain;
    return spec;
}

MetricField build_schwarzschild(const SchwarzschildParams& params) {
    return build_general(schwarzschild_spec(params));
}

ToricMetricSpec plebanski_demianski_spec(const PDParams& params) {
    if (params.sign != 1 && params.sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    ToricMetricSpec spec;
    spec.q = affine_field(1.0, params.sign == 1 ? 1.0 : -1.0, 0.0);
    // A(x) = a0 − P(x), B(y) = b0 + P(y).
    spec.A = polynomial_profile({params.a0 - params.p[0], -params.p[1],
                                 -params.p[2], -params.p[3]});
    spec.B = polynomial_profile({params.b0 + params.p[0], params.p[1],
                                 params.p[2], params.p[3]});
    spec.theta = half_pi;
    spec.domain = params.domain;
    return spec;
}

MetricField build_plebanski_demianski(const PDParams& params) {
    return build_general(plebanski_demianski_spec(params));
}

Profile1 F_profile(double alpha, double c, double k) {
    if (alpha == 0.5) throw std::invalid_argument("alpha = 1/2 excluded");
    double e = 2.0 * alpha * alpha / (2.0 * alpha - 1.0) + 1.0;
    bool integral = (e == std::nearbyint(e)) && std::abs(e) < 1e9;
    Profile1 f;
    f.eval = [c, k, e, integral](double t) {
        Jet1 tj = Jet1::variable(t);
        Jet1 power = integral ? pow_int(tj, static_cast<long long>(e))
                              : pow_real(tj, e);
        return c * tj * tj + k * power;
    };
    return f;
}

ToricMetricSpec case_v_spec(const CaseVParams& params) {
    if (params.alpha == 0.5) {
        throw std::invalid_argument("alpha = 1/2 excluded");
    }
    ToricMetricSpec spec;
    double alpha = params.alpha;
    ScalarField2 q;
    q.eval = [alpha](double x, double y) {
        return pow_real(Jet2::variable_x(x), alpha) *
               pow_real(Jet2::variable_y(y), 1.0 - alpha);
    };
    spec.q = q;
    spec.A = F_profile(alpha, params.c, params.k1);
    spec.B = F_profile(1.0 - alpha, -params.c, params.k2);
    spec.theta = half_pi;
    spec.domain = params.domain;
    if (!(spec.domain.x_min > 0.0) || !(spec.domain.y_min > 0.0)) {
        throw std::invalid_argument("domain must satisfy x, y > 0");
    }
    return spec;
}

MetricField build_case_v(const CaseVParams& params) {
    return build_general(case_v_spec(params));
}

ToricMetricSpec case_iv_spec(const CaseIVParams& params) {
    if (!params.f) {
        throw std::invalid_argument("case requires a profile f(z)");
    }
    ToricMetricSpec spec;
    Profile1 f = params.f;
    ScalarField2 q;
    q.eval = [f](double x, double y) {
        Jet2 z = Jet2::variable_x(x) / Jet2::variable_y(y);
        return Jet2::variable_y(y) * compose_univariate(f(z.value), z);
    };
    spec.q = q;
    spec.A = polynomial_profile({params.a0, 0.0, -1.0});
    spec.B = polynomial_profile({params.b0, 0.0, 1.0});
    spec.theta = half_pi;
    spec.domain = params.domain;
    return spec;
}

MetricField build_case_iv(const CaseIVParams& params) {
    return build_general(case_iv_spec(params));
}

ToricMetricSpec product_surface_spec(const ProductSurfaceParams& params) {
    if (params.f_kind != Analytic::cosh && params.f_kind != Analytic::sinh &&
        params.f_kind != Analytic::sin) {
        throw std::invalid_argument(
            "profile kind must be cosh, sinh, or sin");
    }
    ToricMetricSpec spec;
    Analytic kind = params.f_kind;
    bool swap = params.swap_xy;
    ScalarField2 q;
    q.eval = [kind, swap](double x, double y) {
        Jet2 arg = swap ? Jet2::variable_y(y) : Jet2::variable_x(x);
        return jet_compose(kind, arg);
    };
    spec.q = q;
    spec.A = constant_profile(params.A);
    spec.B = constant_profile(params.B);
    spec.theta = half_pi;
    spec.domain = params.domain;
    return spec;
}

MetricField build_product_surface(const ProductSurfaceParams& params) {
    return build_general(product_surface_spec(params));
}

}  // namespace toric
