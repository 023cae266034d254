#include "toric/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toric {

namespace {

constexpr double half_pi = 1.5707963267948966;

// cos θ with the orthogonal angle mapped to an exact zero, so that the
// cross-term formulas vanish structurally rather than to round-off.
double cos_angle(double theta) {
    return theta == half_pi ? 0.0 : std::cos(theta);
}

struct LocalData {
    double q, qx, qy, qxx, qxy, qyy;
    double A, Ap, App;
    double B, Bp, Bpp;
};

LocalData gather(const ScalarField2& q, const Profile1& A, const Profile1& B,
                 Point2 p) {
    Jet2 qj = q(p.x, p.y);
    Jet1 Aj = A(p.x);
    Jet1 Bj = B(p.y);
    return {qj.value, qj.d10, qj.d01, qj.d20,    qj.d11, qj.d02,
            Aj.value, Aj.d1,  Aj.d2,  Bj.value, Bj.d1,  Bj.d2};
}

void require_fields(const ToricMetricSpec& spec) {
    if (!spec.q || !spec.A || !spec.B) {
        throw std::invalid_argument("metric spec requires q, A, and B");
    }
}

Jet2 lift_x(const Profile1& f, double x) {
    return compose_univariate(f(x), Jet2::variable_x(x));
}

Jet2 lift_y(const Profile1& f, double y) {
    return compose_univariate(f(y), Jet2::variable_y(y));
}

// Shared assembly of the closed-form Ricci components; the angle enters
// only through cos θ (cot θ = cos θ / sin θ).
TensorValue assemble_ricci(const LocalData& d, double cos_theta,
                           double sin_theta) {
    double q = d.q, A = d.A, B = d.B;
    double q2 = q * q;
    double cot = cos_theta / sin_theta;
    double cot2 = cot * cot;
    double T2 = d.qx * d.qx * A + d.qy * d.qy * B;
    double G = B * d.Ap * d.Ap + A * d.Bp * d.Bp;

    double bracket_x = d.App / 2.0 -
                       (2.0 * d.qx * d.Ap + 3.0 * d.qxx * A + d.qy * d.Bp +
                        d.qyy * B) /
                           q +
                       3.0 * T2 / q2 + d.Ap * d.Ap * cot2 / (8.0 * A);
    double bracket_y = d.Bpp / 2.0 -
                       (2.0 * d.qy * d.Bp + 3.0 * d.qyy * B + d.qx * d.Ap +
                        d.qxx * A) /
                           q +
                       3.0 * T2 / q2 + d.Bp * d.Bp * cot2 / (8.0 * B);
    double bracket_s = d.App / 2.0 -
                       (2.0 * d.qx * d.Ap + 3.0 * d.qxx * A + d.qy * d.Bp +
                        d.qyy * B) /
                           q +
                       3.0 * T2 / q2 - G * cot2 / (8.0 * A * B);
    double bracket_t = d.Bpp / 2.0 -
                       (2.0 * d.qy * d.Bp + 3.0 * d.qyy * B + d.qx * d.Ap +
                        d.qxx * A) /
                           q +
                       3.0 * T2 / q2 - G * cot2 / (8.0 * A * B);

    TensorValue out;
    out.kind = TensorKind::covariant2;
    out.at(0, 0) = -bracket_x / A;
    out.at(1, 1) = -bracket_y / B;
    out.at(0, 1) = 2.0 * d.qxy / q + d.Ap * d.Bp * cot / (8.0 * A * B);
    out.at(1, 0) = out.at(0, 1);
    out.at(2, 2) = -A * bracket_s;
    out.at(3, 3) = -B * bracket_t;
    if (cos_theta != 0.0) {
        double sqab = std::sqrt(A * B);
        double st =
            -sqab * cos_theta *
                ((d.App + d.Bpp) / 4.0 -
                 (3.0 * (d.qx * d.Ap + d.qy * d.Bp) +
                  2.0 * (d.qxx * A + d.qyy * B)) /
                     (2.0 * q) +
                 3.0 * T2 / q2) +
            G * cos_theta / (8.0 * sqab * sin_theta * sin_theta);
        out.at(2, 3) = st;
        out.at(3, 2) = st;
    }
    return out;
}

}  // namespace

AuxPotentials aux_from_v(const ToricMetricSpec& spec,
                         const BaseVectorField& V) {
    require_fields(spec);
    ScalarField2 q = spec.q;
    Profile1 A = spec.A;
    Profile1 B = spec.B;
    ScalarField2 vx = V.vx;
    ScalarField2 vy = V.vy;

    AuxPotentials S;
    S.sx.eval = [q, A, vx](double x, double y) {
        Jet2 qj = q(x, y);
        Jet2 out = 2.0 * qj * dx_jet(qj);
        if (vx) out = out + vx(x, y) / lift_x(A, x);
        return out;
    };
    S.sy.eval = [q, B, vy](double x, double y) {
        Jet2 qj = q(x, y);
        Jet2 out = 2.0 * qj * dy_jet(qj);
        if (vy) out = out + vy(x, y) / lift_y(B, y);
        return out;
    };
    return S;
}

BaseVectorField v_from_aux(const ToricMetricSpec& spec,
                           const AuxPotentials& S) {
    require_fields(spec);
    if (!S.sx || !S.sy) {
        throw std::invalid_argument("potential pair requires both fields");
    }
    ScalarField2 q = spec.q;
    Profile1 A = spec.A;
    Profile1 B = spec.B;
    ScalarField2 sx = S.sx;
    ScalarField2 sy = S.sy;

    BaseVectorField V;
    V.vx.eval = [q, A, sx](double x, double y) {
        Jet2 qj = q(x, y);
        return lift_x(A, x) * (sx(x, y) - 2.0 * qj * dx_jet(qj));
    };
    V.vy.eval = [q, B, sy](double x, double y) {
        Jet2 qj = q(x, y);
        return lift_y(B, y) * (sy(x, y) - 2.0 * qj * dy_jet(qj));
    };
    return V;
}

ReducedResiduals reduced_residuals_axisym(const ScalarField2& q,
                                          const Profile1& A,
                                          const Profile1& B,
                                          const AuxPotentials& S,
                                          double lambda, Normalization norm,
                                          Point2 p) {
    if (!q || !A || !B || !S.sx || !S.sy) {
        throw std::invalid_argument(
            "reduced system requires q, profiles, and both potentials");
    }
    LocalData d = gather(q, A, B, p);
    if (d.q == 0.0) throw std::domain_error("q vanishes at the point");
    Jet2 sx = S.sx(p.x, p.y);
    Jet2 sy = S.sy(p.x, p.y);
    double q2 = d.q * d.q;

    ReducedResiduals r;
    r.r_mixed = sx.d01 + sy.d10 - 4.0 * d.qx * d.qy;
    r.r_xx = sx.d10 - 2.0 * d.qx * d.qx;
    r.r_yy = sy.d01 - 2.0 * d.qy * d.qy;
    double wA = d.App - sx.value * d.Ap / q2;
    double wB = d.Bpp - sy.value * d.Bp / q2;
    r.r_w = wA - wB;

    double T1 = d.qx * d.Ap + d.qxx * d.A + d.qy * d.Bp + d.qyy * d.B;
    double T2 = d.qx * d.qx * d.A + d.qy * d.qy * d.B;
    double T3 = sx.value * d.qx * d.A + sy.value * d.qy * d.B;
    double rho = 0.5 * wA - T1 / d.q + T2 / q2 + T3 / (q2 * d.q);
    double implied =
        (norm == Normalization::N1) ? -q2 * rho : -d.q * rho;
    r.lambda_used = lambda;
    r.r_lambda = implied - lambda;
    return r;
}

ReducedResiduals reduced_residuals_nonaxisym(const ScalarField2& q,
                                             const Profile1& A,
                                             const Profile1& B,
                                             const AuxPotentials& S,
                                             double lambda,
                                             Normalization norm, Point2 p) {
    if (!q || !A || !B || !S.sx || !S.sy) {
        throw std::invalid_argument(
            "reduced system requires q, profiles, and both potentials");
    }
    LocalData d = gather(q, A, B, p);
    if (std::abs(d.Ap) > 1e-12 || std::abs(d.App) > 1e-12 ||
        std::abs(d.Bp) > 1e-12 || std::abs(d.Bpp) > 1e-12) {
        throw std::invalid_argument(
            "general-angle reduced system requires constant profiles");
    }
    if (d.q == 0.0) throw std::domain_error("q vanishes at the point");
    Jet2 sx = S.sx(p.x, p.y);
    Jet2 sy = S.sy(p.x, p.y);

    ReducedResiduals r;
    r.r_mixed = sx.d01 + sy.d10 - 4.0 * d.qx * d.qy;
    r.r_xx = sx.d10 - 2.0 * d.qx * d.qx;
    r.r_yy = sy.d01 - 2.0 * d.qy * d.qy;
    r.r_w = 0.0;

    double T2 = d.qx * d.qx * d.A + d.qy * d.qy * d.B;
    double T3 = sx.value * d.qx * d.A + sy.value * d.qy * d.B;
    double rho = d.qxx * d.A + d.qyy * d.B - T2 / d.q - T3 / (d.q * d.q);
    double implied = (norm == Normalization::N1) ? d.q * rho : rho;
    r.lambda_used = lambda;
    r.r_lambda = implied - lambda;
    return r;
}

TensorValue closed_form_ricci_nonaxisym(const ToricMetricSpec& spec,
                                        Point2 p) {
    require_fields(spec);
    if (!(spec.theta > 0.0) || !(spec.theta < half_pi)) {
        throw std::invalid_argument(
            "mixed-angle closed form requires theta strictly inside "
            "(0, pi/2); use the orthogonal variant at pi/2");
    }
    LocalData d = gather(spec.q, spec.A, spec.B, p);
    return assemble_ricci(d, std::cos(spec.theta), std::sin(spec.theta));
}

TensorValue closed_form_ricci_axisym(const ToricMetricSpec& spec, Point2 p) {
    require_fields(spec);
    if (spec.theta != half_pi) {
        throw std::invalid_argument(
            "orthogonal closed form requires theta = pi/2");
    }
    LocalData d = gather(spec.q, spec.A, spec.B, p);
    return assemble_ricci(d, 0.0, 1.0);
}

TensorValue closed_form_ricci_correction(const ToricMetricSpec& spec,
                                         Point2 p) {
    require_fields(spec);
    if (!(spec.theta > 0.0) || !(spec.theta <= half_pi)) {
        throw std::invalid_argument("theta must lie in (0, pi/2]");
    }
    LocalData d = gather(spec.q, spec.A, spec.B, p);
    double cos_theta = cos_angle(spec.theta);
    double cot = cos_theta / std::sin(spec.theta);

    TensorValue out;
    out.kind = TensorKind::covariant2;
    out.at(0, 1) =
        (cot * cot - cot) * d.Ap * d.Bp / (8.0 * d.A * d.B);
    out.at(1, 0) = out.at(0, 1);
    out.at(2, 2) = -2.0 * d.A * d.A * d.qxx / d.q;
    out.at(3, 3) = -2.0 * d.B * d.B * d.qyy / d.q;
    return out;
}

TensorValue closed_form_lie(const ToricMetricSpec& spec,
                            const BaseVectorField& V, Point2 p) {
    require_fields(spec);
    LocalData d = gather(spec.q, spec.A, spec.B, p);
    double vx = 0.0, vy = 0.0, dx_vx = 0.0, dy_vx = 0.0, dx_vy = 0.0,
           dy_vy = 0.0;
    if (V.vx) {
        Jet2 j = V.vx(p.x, p.y);
        vx = j.value;
        dx_vx = j.d10;
        dy_vx = j.d01;
    }
    if (V.vy) {
        Jet2 j = V.vy(p.x, p.y);
        vy = j.value;
        dx_vy = j.d10;
        dy_vy = j.d01;
    }
    double q2 = d.q * d.q;
    double q3 = q2 * d.q;
    double grad = vx * d.qx + vy * d.qy;

    TensorValue out;
    out.kind = TensorKind::covariant2;
    out.at(0, 0) = (2.0 * dx_vx * d.A - vx * d.Ap) / (q2 * d.A * d.A) -
                   2.0 * grad / (q3 * d.A);
    out.at(1, 1) = (2.0 * dy_vy * d.B - vy * d.Bp) / (q2 * d.B * d.B) -
                   2.0 * grad / (q3 * d.B);
    out.at(0, 1) = (dx_vy * d.A + dy_vx * d.B) / (q2 * d.A * d.B);
    out.at(1, 0) = out.at(0, 1);
    out.at(2, 2) = vx * d.Ap / q2 - 2.0 * d.A * grad / q3;
    out.at(3, 3) = vy * d.Bp / q2 - 2.0 * d.B * grad / q3;
    double cos_theta = cos_angle(spec.theta);
    if (cos_theta != 0.0) {
        double st = cos_theta / std::sqrt(d.A * d.B) *
                    ((vx * d.Ap * d.B + vy * d.Bp * d.A) / (2.0 * q2) -
                     2.0 * d.A * d.B * grad / q3);
        out.at(2, 3) = st;
        out.at(3, 2) = st;
    }
    return out;
}

ObstructionReport rigidity_obstruction(const ToricMetricSpec& spec,
                                       const BaseVectorField& V, Point2 p) {
    require_fields(spec);
    if (!(spec.theta > 0.0) || !(spec.theta < half_pi)) {
        throw std::invalid_argument(
            "obstruction applies for theta strictly inside (0, pi/2)");
    }
    LocalData d = gather(spec.q, spec.A, spec.B, p);
    if (!(d.A > 0.0) || !(d.B > 0.0)) {
        throw std::domain_error("profiles must be positive at the point");
    }
    double vx = V.vx ? V.vx(p.x, p.y).value : 0.0;
    double vy = V.vy ? V.vy(p.x, p.y).value : 0.0;
    double q2 = d.q * d.q;

    double shared = 2.0 * (d.Ap * d.B * vx - d.A * d.Bp * vy) +
                    4.0 * d.q * d.A * d.B * (d.Ap * d.qx - d.Bp * d.qy);
    double profile_sq = d.Ap * d.Ap * d.B + d.A * d.Bp * d.Bp;
    double wave = 2.0 * d.A * d.B * (d.App - d.Bpp);

    ObstructionReport report;
    report.e1 = shared + q2 * (profile_sq - wave);
    report.e2 = shared - q2 * (profile_sq + wave);
    report.normalized_difference =
        (report.e1 - report.e2) / (2.0 * q2 * d.A * d.B);
    report.predicted = d.Ap * d.Ap / d.A + d.Bp * d.Bp / d.B;
    return report;
}

std::pair<double, double> lambda_st_vanishing(const ToricMetricSpec& spec,
                                              const BaseVectorField& V,
                                              Point2 p) {
    MetricField M = build_general(spec);
    TensorValue lam = lambda_tensor(M, V, p);
    return {lam.at(2, 3), lam.at(3, 2)};
}

namespace {

// Composite Simpson accumulating m simultaneous integrands over [a, b]
// with n subintervals (n forced even, at least 2). Degenerate ranges give
// exact zeros.
template <typename F>
void simpson_accumulate(F&& integrands, double a, double b, int n,
                        double* sums, int m) {
    for (int k = 0; k < m; ++k) sums[k] = 0.0;
    if (a == b) return;
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    double h = (b - a) / n;
    double vals[4];
    for (int i = 0; i <= n; ++i) {
        double u = (i == n) ? b : a + h * i;
        integrands(u, vals);
        double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        for (int k = 0; k < m; ++k) sums[k] += w * vals[k];
    }
    for (int k = 0; k < m; ++k) sums[k] *= h / 3.0;
}

}  // namespace

SolvedPotentials solve_aux_potentials(const ScalarField2& q, const Box& domain,
                                      int resolution) {
    if (!q) throw std::invalid_argument("conformal factor required");
    if (resolution < 4) {
        throw std::invalid_argument("resolution must be at least 4");
    }
    int n = resolution + (resolution % 2);
    double x0 = domain.x_min;
    double y0 = domain.y_min;

    // Corner data shared by both fields: the split constant of the mixed
    // equation and the anchor values 2q·∇q.
    Jet2 q00 = q(x0, y0);
    double r00 = 4.0 * q00.d10 * q00.d01;
    double anchor_x = 2.0 * q00.value * q00.d10;
    double anchor_y = 2.0 * q00.value * q00.d01;

    AuxPotentials S;

    // Sx(x, y) = ∫ 2qx²(u, y) du + φ(y). The slope split φ′(y) keeps the
    // mixed equation exact whenever it is solvable: φ′(y) equals the edge
    // restriction of 4qxqy − ∂y∫2qx² − ∂x∫2qy², with the double integral
    // of the second edge term collapsed to a single pass by swapping the
    // integration order.
    S.sx.eval = [q, x0, y0, n, r00, anchor_x](double x, double y) {
        double ix[3];
        simpson_accumulate(
            [&](double u, double* out) {
                Jet2 qj = q(u, y);
                Jet2 qx = dx_jet(qj);
                Jet2 g = 2.0 * qx * qx;
                out[0] = g.value;
                out[1] = g.d01;
                out[2] = g.d02;
            },
            x0, x, n, ix, 3);

        double iy[3];
        simpson_accumulate(
            [&](double v, double* out) {
                Jet2 qj = q(x0, v);
                Jet2 k = 4.0 * dx_jet(qj) * dy_jet(qj);
                Jet2 hjet = 2.0 * dy_jet(qj) * dy_jet(qj);
                out[0] = k.value - r00 / 2.0;
                out[1] = hjet.d10 * (y - v);
                out[2] = hjet.d10;
            },
            y0, y, n, iy, 3);

        Jet2 q_edge = q(x0, y);
        Jet2 k_edge = 4.0 * dx_jet(q_edge) * dy_jet(q_edge);
        Jet2 h_edge = 2.0 * dy_jet(q_edge) * dy_jet(q_edge);
        double phi = anchor_x + iy[0] - iy[1];
        double phi_p = k_edge.value - r00 / 2.0 - iy[2];
        double phi_pp = k_edge.d01 - h_edge.d10;

        Jet2 qj = q(x, y);
        Jet2 qx = dx_jet(qj);
        Jet2 g = 2.0 * qx * qx;

        Jet2 out;
        out.value = ix[0] + phi;
        out.d10 = g.value;
        out.d01 = ix[1] + phi_p;
        out.d20 = g.d10;
        out.d11 = g.d01;
        out.d02 = ix[2] + phi_pp;
        out.d30 = g.d20;
        out.d21 = g.d11;
        out.d12 = g.d02;
        out.d03 = 0.0;  // third pure-y order is not tracked
        return out;
    };

    S.sy.eval = [q, x0, y0, n, r00, anchor_y](double x, double y) {
        double iy[3];
        simpson_accumulate(
            [&](double v, double* out) {
                Jet2 qj = q(x, v);
                Jet2 qy = dy_jet(qj);
                Jet2 g = 2.0 * qy * qy;
                out[0] = g.value;
                out[1] = g.d10;
                out[2] = g.d20;
            },
            y0, y, n, iy, 3);

        double ix[3];
        simpson_accumulate(
            [&](double u, double* out) {
                Jet2 qj = q(u, y0);
                Jet2 k = 4.0 * dx_jet(qj) * dy_jet(qj);
                Jet2 hjet = 2.0 * dx_jet(qj) * dx_jet(qj);
                out[0] = k.value - r00 / 2.0;
                out[1] = hjet.d01 * (x - u);
                out[2] = hjet.d01;
            },
            x0, x, n, ix, 3);

        Jet2 q_edge = q(x, y0);
        Jet2 k_edge = 4.0 * dx_jet(q_edge) * dy_jet(q_edge);
        Jet2 h_edge = 2.0 * dx_jet(q_edge) * dx_jet(q_edge);
        double psi = anchor_y + ix[0] - ix[1];
        double psi_p = k_edge.value - r00 / 2.0 - ix[2];
        double psi_pp = k_edge.d10 - h_edge.d01;

        Jet2 qj = q(x, y);
        Jet2 qy = dy_jet(qj);
        Jet2 g = 2.0 * qy * qy;

        Jet2 out;
        out.value = iy[0] + psi;
        out.d01 = g.value;
        out.d10 = iy[1] + psi_p;
        out.d02 = g.d01;
        out.d11 = g.d10;
        out.d20 = iy[2] + psi_pp;
        out.d03 = g.d02;
        out.d12 = g.d11;
        out.d21 = g.d20;
        out.d30 = 0.0;  // third pure-x order is not tracked
        return out;
    };

    // Diagnostics over a fixed sample grid: worst mixed-equation residual
    // of the constructed pair, and the pointwise separability defect
    // ∂x∂y(4qxqy) − ∂y²(2qx²) − ∂x²(2qy²), which vanishes exactly when a
    // potential pair exists.
    QuadratureReport report;
    report.resolution = resolution;
    const int grid_n = 17;
    double sum = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            double x =
                x0 + (domain.x_max - x0) * i / (grid_n - 1.0);
            double y =
                y0 + (domain.y_max - y0) * j / (grid_n - 1.0);
            Jet2 qj = q(x, y);
            Jet2 sx = S.sx(x, y);
            Jet2 sy = S.sy(x, y);
            double mixed =
                std::abs(sx.d01 + sy.d10 - 4.0 * qj.d10 * qj.d01);
            report.mixed_residual_max =
                std::max(report.mixed_residual_max, mixed);
            sum += mixed;

            Jet2 k = 4.0 * dx_jet(qj) * dy_jet(qj);
            Jet2 gx = 2.0 * dx_jet(qj) * dx_jet(qj);
            Jet2 gy = 2.0 * dy_jet(qj) * dy_jet(qj);
            double sep = std::abs(k.d11 - gx.d02 - gy.d20);
            report.separability_defect =
                std::max(report.separability_defect, sep);
        }
    }
    report.mixed_residual_mean = sum / (grid_n * grid_n);

    return SolvedPotentials{std::move(S), report};
}

EinsteinCheck einstein_residual(const MetricField& M, const Box& box, int nx,
                                int ny) {
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("grid must be at least 2x2");
    }
    EinsteinCheck check;
    check.lambda =
        scalar_curvature(M, {box.x_mid(), box.y_mid()}) / 4.0;

    double sum = 0.0;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            Point2 p{box.x_min + (box.x_max - box.x_min) * i / (nx - 1.0),
                     box.y_min + (box.y_max - box.y_min) * j / (ny - 1.0)};
            TensorValue g = metric_at(M, p);
            TensorValue ric = ricci(M, p);
            double local = std::abs(scalar_curvature(M, p) / 4.0 -
                                    check.lambda);
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    local = std::max(local,
                                     std::abs(ric.at(a, b) -
                                              check.lambda * g.at(a, b)));
                }
            }
            check.max_residual = std::max(check.max_residual, local);
            sum += local;
        }
    }
    check.mean_residual = sum / (nx * ny);
    return check;
}

SurfaceConditions surface_factor_conditions(const ScalarField2& q, double A,
                                            Point2 p) {
    if (!q) throw std::invalid_argument("conformal factor required");
    if (!(A > 0.0)) throw std::invalid_argument("profile must be positive");
    Jet2 qj = q(p.x, p.y);
    Jet2 qx = dx_jet(qj);
    Jet2 qy = dy_jet(qj);
    Jet2 qxx = dx_jet(qx);
    Jet2 qyy = dy_jet(qy);

    SurfaceConditions out;
    out.flat_residual = (qj * qyy - qy * qy).value;
    Jet2 einstein = qj * qxx - qx * qx;  // exact through first order
    out.lambda_over_A = einstein.value;
    out.einstein_residual =
        std::max(std::abs(einstein.d10), std::abs(einstein.d01));
    return out;
}

double verify_h_ode(Analytic h_kind, double lambda, double A,
                    const std::vector<double>& xs) {
    if (!(A > 0.0)) throw std::invalid_argument("profile must be positive");
    if (h_kind == Analytic::cosh) {
        if (lambda < 0.0) {
            throw std::invalid_argument(
                "cosh branch requires lambda >= 0");
        }
    } else if (h_kind == Analytic::sinh || h_kind == Analytic::sin) {
        if (lambda > 0.0) {
            throw std::invalid_argument(
                "sinh and sin branches require lambda <= 0");
        }
    } else {
        throw std::invalid_argument("h must be cosh, sinh, or sin");
    }

    double target = lambda / A;
    double s2 = std::abs(target);
    double worst = 0.0;
    for (double x : xs) {
        double f = 0.0, f1 = 0.0, f2 = 0.0;
        switch (h_kind) {
            case Analytic::cosh:
                f = std::cosh(x);
                f1 = std::sinh(x);
                f2 = f;
                break;
            case Analytic::sinh:
                f = std::sinh(x);
                f1 = std::cosh(x);
                f2 = f;
                break;
            default:
                f = std::sin(x);
                f1 = std::cos(x);
                f2 = -f;
                break;
        }
        worst = std::max(worst,
                         std::abs(s2 * (f * f2 - f1 * f1) - target));
    }
    return worst;
}

}  // namespace toric
