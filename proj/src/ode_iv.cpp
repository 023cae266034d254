#include "toric/ode_iv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <utility>

namespace toric {

namespace {

// Below this magnitude the linear solve for f''' has no significant digits
// left in double precision.
constexpr double singular_coefficient_floor = 1e-8;

std::string singularity_message(double z, double coefficient) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "f''' coefficient %.17g degenerate at z = %.17g",
                  coefficient, z);
    return buf;
}

double f3_coefficient(const ODEParamsIV& p, double z, double f, double f1) {
    double w = p.a0 + p.b0 * z * z;
    return -w * (p.b0 * z * f - w * f1) * f * f;
}

}  // namespace

OdeSingularity::OdeSingularity(double z, double coefficient)
    : std::runtime_error(singularity_message(z, coefficient)),
      z_(z),
      coefficient_(coefficient) {}

double ode_iv_residual(const ODEParamsIV& p, double z, double f, double f1,
                       double f2, double f3) {
    double w = p.a0 + p.b0 * z * z;
    double P = p.a0 * f1 * f1 + p.b0 * (f - z * f1) * (f - z * f1);
    return -3.0 * P * P - p.lambda * P +
           (4.0 * p.a0 - p.b0 * z * z) * p.b0 * f * f * f * f2 +
           w * w * f * f2 * (f1 * f1 - f * f2) + p.lambda * w * f * f2 -
           w * (p.b0 * z * f - w * f1) * f * f * f3;
}

double ode_iv_rhs(const ODEParamsIV& p, const ODEStateIV& s) {
    double c3 = f3_coefficient(p, s.z, s.f, s.f1);
    if (std::abs(c3) <= singular_coefficient_floor) {
        throw OdeSingularity(s.z, c3);
    }
    double rest = ode_iv_residual(p, s.z, s.f, s.f1, s.f2, 0.0);
    return -rest / c3;
}

TrajectoryIV::TrajectoryIV(std::vector<TrajectoryNodeIV> nodes,
                           bool hit_singularity, double singular_coefficient)
    : hit_singularity_(hit_singularity),
      singular_coefficient_(singular_coefficient) {
    if (nodes.empty()) {
        throw std::invalid_argument("trajectory requires at least one node");
    }
    if (nodes.size() >= 2 && nodes.back().z < nodes.front().z) {
        std::reverse(nodes.begin(), nodes.end());
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i].z > nodes[i - 1].z)) {
            throw std::invalid_argument(
                "trajectory nodes must be strictly monotone in z");
        }
    }
    nodes_ = std::make_shared<const std::vector<TrajectoryNodeIV>>(
        std::move(nodes));
}

bool TrajectoryIV::contains(double z) const {
    return z >= z_min() && z <= z_max();
}

std::size_t TrajectoryIV::segment_index(double z) const {
    const auto& ns = *nodes_;
    if (!contains(z)) {
        throw std::out_of_range("z outside the sampled trajectory range");
    }
    if (ns.size() == 1) return 0;
    auto it = std::upper_bound(
        ns.begin(), ns.end(), z,
        [](double v, const TrajectoryNodeIV& n) { return v < n.z; });
    std::size_t hi = static_cast<std::size_t>(it - ns.begin());
    if (hi == 0) return 0;
    if (hi >= ns.size()) return ns.size() - 2;
    return hi - 1;
}

Jet1 TrajectoryIV::eval_f(double z) const {
    const auto& ns = *nodes_;
    std::size_t i = segment_index(z);
    if (ns.size() == 1) {
        return Jet1{ns[0].f, ns[0].f1, ns[0].f2, ns[0].f3};
    }
    const TrajectoryNodeIV& a = ns[i];
    const TrajectoryNodeIV& b = ns[i + 1];
    double h = b.z - a.z;
    double t = (z - a.z) / h;
    double t2 = t * t;
    double t3 = t2 * t;

    Jet1 out;
    out.value = (2.0 * t3 - 3.0 * t2 + 1.0) * a.f +
                (t3 - 2.0 * t2 + t) * h * a.f1 +
                (-2.0 * t3 + 3.0 * t2) * b.f + (t3 - t2) * h * b.f1;
    out.d1 = ((6.0 * t2 - 6.0 * t) * a.f + (3.0 * t2 - 4.0 * t + 1.0) * h * a.f1 +
              (-6.0 * t2 + 6.0 * t) * b.f + (3.0 * t2 - 2.0 * t) * h * b.f1) /
             h;
    out.d2 = (1.0 - t) * a.f2 + t * b.f2;
    out.d3 = (1.0 - t) * a.f3 + t * b.f3;
    return out;
}

Jet1 TrajectoryIV::eval_sigma(double z) const {
    const auto& ns = *nodes_;
    std::size_t i = segment_index(z);
    Jet1 f = eval_f(z);
    Jet1 out;
    if (ns.size() == 1) {
        out.value = ns[0].sigma;
    } else {
        const TrajectoryNodeIV& a = ns[i];
        const TrajectoryNodeIV& b = ns[i + 1];
        double h = b.z - a.z;
        double t = (z - a.z) / h;
        double t2 = t * t;
        double t3 = t2 * t;
        double sa = 2.0 * a.f1 * a.f1;
        double sb = 2.0 * b.f1 * b.f1;
        out.value = (2.0 * t3 - 3.0 * t2 + 1.0) * a.sigma +
                    (t3 - 2.0 * t2 + t) * h * sa +
                    (-2.0 * t3 + 3.0 * t2) * b.sigma + (t3 - t2) * h * sb;
    }
    out.d1 = 2.0 * f.d1 * f.d1;
    out.d2 = 4.0 * f.d1 * f.d2;
    out.d3 = 4.0 * f.d2 * f.d2 + 4.0 * f.d1 * f.d3;
    return out;
}

namespace {

// State advanced by the integrator: (f, f', f'', sigma).
using StateVec = std::array<double, 4>;

StateVec derivative(const ODEParamsIV& p, double z, const StateVec& u) {
    double f3 = ode_iv_rhs(p, ODEStateIV{z, u[0], u[1], u[2]});
    return {u[1], u[2], f3, 2.0 * u[1] * u[1]};
}

StateVec rk4_step(const ODEParamsIV& p, double z, const StateVec& u,
                  double h) {
    StateVec k1 = derivative(p, z, u);
    StateVec s2, s3, s4;
    for (int i = 0; i < 4; ++i) s2[i] = u[i] + 0.5 * h * k1[i];
    StateVec k2 = derivative(p, z + 0.5 * h, s2);
    for (int i = 0; i < 4; ++i) s3[i] = u[i] + 0.5 * h * k2[i];
    StateVec k3 = derivative(p, z + 0.5 * h, s3);
    for (int i = 0; i < 4; ++i) s4[i] = u[i] + h * k3[i];
    StateVec k4 = derivative(p, z + h, s4);
    StateVec out;
    for (int i = 0; i < 4; ++i) {
        out[i] = u[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

TrajectoryNodeIV make_node(const ODEParamsIV& p, double z, const StateVec& u) {
    TrajectoryNodeIV node;
    node.z = z;
    node.f = u[0];
    node.f1 = u[1];
    node.f2 = u[2];
    node.f3 = ode_iv_rhs(p, ODEStateIV{z, u[0], u[1], u[2]});
    node.sigma = u[3];
    return node;
}

}  // namespace

TrajectoryIV integrate_iv(const ODEParamsIV& params, ODEStateIV init,
                          double z_end, const IntegrationConfig& config) {
    std::vector<TrajectoryNodeIV> nodes;
    StateVec u{init.f, init.f1, init.f2, 0.0};
    double z = init.z;
    // A singular initial point violates the caller's contract, so the
    // singularity propagates instead of producing an empty trajectory.
    nodes.push_back(make_node(params, z, u));
    if (z_end == init.z) {
        return TrajectoryIV(std::move(nodes));
    }

    double dir = z_end > init.z ? 1.0 : -1.0;
    bool flagged = false;
    double flagged_coefficient = 0.0;

    try {
        if (config.fixed_step) {
            if (!(config.step_size > 0.0)) {
                throw std::invalid_argument("step_size must be positive");
            }
            double span = std::abs(z_end - init.z);
            std::size_t steps = static_cast<std::size_t>(
                std::ceil(span / config.step_size - 1e-12));
            if (steps == 0) steps = 1;
            if (steps > config.max_nodes) {
                throw std::runtime_error("fixed-step node budget exhausted");
            }
            double h = (z_end - init.z) / static_cast<double>(steps);
            for (std::size_t k = 1; k <= steps; ++k) {
                u = rk4_step(params, z, u, h);
                z = init.z + (z_end - init.z) * static_cast<double>(k) /
                                 static_cast<double>(steps);
                nodes.push_back(make_node(params, z, u));
            }
        } else {
            if (!(config.error_target > 0.0)) {
                throw std::invalid_argument("error_target must be positive");
            }
            double h = std::abs(config.initial_step) * dir;
            while ((z_end - z) * dir > 0.0) {
                if (std::abs(h) > std::abs(z_end - z)) {
                    h = z_end - z;
                }
                StateVec full = rk4_step(params, z, u, h);
                StateVec mid = rk4_step(params, z, u, 0.5 * h);
                StateVec halves =
                    rk4_step(params, z + 0.5 * h, mid, 0.5 * h);
                double err = 0.0;
                for (int i = 0; i < 4; ++i) {
                    err = std::max(err, std::abs(full[i] - halves[i]) / 15.0);
                }
                double tol = config.error_target * std::abs(h);
                if (err <= tol) {
                    u = halves;
                    z += h;
                    nodes.push_back(make_node(params, z, u));
                    if (nodes.size() > config.max_nodes) {
                        throw std::runtime_error(
                            "adaptive node budget exhausted");
                    }
                    if (err < tol / 32.0) h *= 2.0;
                } else {
                    h *= 0.5;
                    if (std::abs(h) < config.min_step) {
                        throw std::runtime_error(
                            "step size underflow in adaptive integration");
                    }
                }
            }
        }
    } catch (const OdeSingularity& sing) {
        flagged = true;
        flagged_coefficient = sing.coefficient();
    }

    return TrajectoryIV(std::move(nodes), flagged, flagged_coefficient);
}

CaseIVParams metric_from_trajectory(const TrajectoryIV& traj, double a0,
                                    double b0, const Box& window) {
    if (!(window.x_min > 0.0) || !(window.y_min > 0.0) ||
        !(window.x_max > window.x_min) || !(window.y_max > window.y_min)) {
        throw std::invalid_argument(
            "window must satisfy 0 < x_min < x_max and 0 < y_min < y_max");
    }
    double z_lo = window.x_min / window.y_max;
    double z_hi = window.x_max / window.y_min;
    if (!traj.contains(z_lo) || !traj.contains(z_hi)) {
        throw std::invalid_argument(
            "window z-range falls outside the sampled trajectory");
    }
    const int samples = 257;
    for (int k = 0; k < samples; ++k) {
        double z = z_lo + (z_hi - z_lo) * k / (samples - 1.0);
        if (!(traj.eval_f(z).value > 0.0)) {
            throw std::domain_error(
                "profile must stay positive over the window");
        }
    }

    CaseIVParams params;
    params.a0 = a0;
    params.b0 = b0;
    params.domain = window;
    TrajectoryIV local = traj;
    params.f.eval = [local](double z) { return local.eval_f(z); };
    return params;
}

AuxPotentials case_iv_potentials(const TrajectoryIV& traj, double c_sigma) {
    AuxPotentials S;
    TrajectoryIV tx = traj;
    S.sx.eval = [tx, c_sigma](double x, double y) {
        Jet2 X = Jet2::variable_x(x);
        Jet2 Y = Jet2::variable_y(y);
        Jet2 Z = X / Y;
        Jet2 sigma = compose_univariate(tx.eval_sigma(x / y), Z);
        return Y * (sigma + c_sigma);
    };
    TrajectoryIV ty = traj;
    S.sy.eval = [ty, c_sigma](double x, double y) {
        Jet2 X = Jet2::variable_x(x);
        Jet2 Y = Jet2::variable_y(y);
        Jet2 Z = X / Y;
        double z = x / y;
        Jet2 f = compose_univariate(ty.eval_f(z), Z);
        Jet2 sigma = compose_univariate(ty.eval_sigma(z), Z);
        return Y * (2.0 * f * f - Z * (sigma + c_sigma));
    };
    return S;
}

double fit_sigma_constant(const TrajectoryIV& traj, const ODEParamsIV& params,
                          const Box& window, Point2 probe) {
    CaseIVParams cp = metric_from_trajectory(traj, params.a0, params.b0,
                                             window);
    ToricMetricSpec spec = case_iv_spec(cp);

    auto residual_at = [&](double c) {
        AuxPotentials S = case_iv_potentials(traj, c);
        ReducedResiduals r = reduced_residuals_axisym(
            spec.q, spec.A, spec.B, S, params.lambda, Normalization::N1,
            probe);
        return r.r_lambda;
    };
    double r0 = residual_at(0.0);
    double r1 = residual_at(1.0);
    double slope = r1 - r0;
    if (std::abs(slope) <= 1e-14 * (1.0 + std::abs(r0))) {
        throw std::runtime_error(
            "constant-slot residual insensitive to the gauge constant at "
            "the probe point");
    }
    return -r0 / slope;
}

}  // namespace toric
