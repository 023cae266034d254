#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "toric/families.hpp"
#include "toric/soliton.hpp"

namespace toric {

// Parameters of the third-order profile equation behind the self-similar
// family built on q = y·f(x/y) with A = a0 − x² and B = b0 + y².
struct ODEParamsIV {
    double a0 = 4.0;
    double b0 = 1.0;
    double lambda = 0.0;
};

// Instantaneous state (z, f, f', f'') of the profile. The third derivative
// is not part of the state; it is recovered pointwise by solving the
// equation, which is linear in f'''.
struct ODEStateIV {
    double z = 0.0;
    double f = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
};

// Thrown when the coefficient multiplying f''' degenerates, so the equation
// no longer determines the third derivative.
class OdeSingularity : public std::runtime_error {
public:
    OdeSingularity(double z, double coefficient);

    double z() const { return z_; }
    double coefficient() const { return coefficient_; }

private:
    double z_;
    double coefficient_;
};

// One accepted integration node. sigma accumulates the auxiliary potential
// slope integral sigma' = 2 f'^2 alongside the main state so the potential
// construction inherits the integrator's accuracy.
struct TrajectoryNodeIV {
    double z = 0.0;
    double f = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    double sigma = 0.0;
};

// Immutable sampled solution with C^1 dense output. Values and first
// derivatives interpolate with cubic Hermite pieces (exact at the nodes);
// second and third derivatives blend the stored node values linearly, so
// curvature evaluation does not differentiate the interpolant beyond its
// accuracy order.
class TrajectoryIV {
public:
    explicit TrajectoryIV(std::vector<TrajectoryNodeIV> nodes,
                          bool hit_singularity = false,
                          double singular_coefficient = 0.0);

    const std::vector<TrajectoryNodeIV>& nodes() const { return *nodes_; }
    double z_min() const { return nodes_->front().z; }
    double z_max() const { return nodes_->back().z; }
    bool contains(double z) const;

    bool hit_singularity() const { return hit_singularity_; }
    // z of the last accepted node when a singularity stopped integration.
    double singular_z() const { return nodes_->back().z; }
    double singular_coefficient() const { return singular_coefficient_; }

    // Dense profile jet (f, f', f'', f''') at z inside the sampled range.
    Jet1 eval_f(double z) const;
    // Dense jet of sigma: value from the Hermite piece, derivatives from
    // the identities sigma' = 2f'^2, sigma'' = 4f'f'', sigma''' = 4f''^2 +
    // 4f'f'''.
    Jet1 eval_sigma(double z) const;

private:
    std::size_t segment_index(double z) const;

    std::shared_ptr<const std::vector<TrajectoryNodeIV>> nodes_;
    bool hit_singularity_;
    double singular_coefficient_;
};

// The profile equation's right-hand side evaluated literally, term by term,
// at the given data; a solution makes this zero.
double ode_iv_residual(const ODEParamsIV& params, double z, double f,
                       double f1, double f2, double f3);

// Solves the equation, linear in f''', for the third derivative. Throws
// OdeSingularity when the f''' coefficient magnitude is at or below the
// degeneracy threshold of 1e-8, under which the solve carries no precision.
double ode_iv_rhs(const ODEParamsIV& params, const ODEStateIV& state);

struct IntegrationConfig {
    // Local truncation error allowed per unit of z in adaptive mode.
    double error_target = 1e-10;
    double initial_step = 0.05;
    double min_step = 1e-9;
    // Fixed-step mode disables error control and marches with step_size,
    // clipping the final step to land on z_end exactly.
    bool fixed_step = false;
    double step_size = 0.01;
    std::size_t max_nodes = 1000000;
};

// Classical fourth-order Runge-Kutta from init to z_end (either direction)
// with step-halving error control in adaptive mode. A singular f'''
// coefficient stops integration early and returns the partial trajectory
// flagged rather than throwing; step underflow and node exhaustion throw.
TrajectoryIV integrate_iv(const ODEParamsIV& params, ODEStateIV init,
                          double z_end, const IntegrationConfig& config = {});

// Packages a trajectory window as metric input: f becomes a profile backed
// by the dense output, restricted to the window's z range x/y. Requires a
// positive window, its z range inside the trajectory, and f > 0 on it.
CaseIVParams metric_from_trajectory(const TrajectoryIV& traj, double a0,
                                    double b0, const Box& window);

// Auxiliary potential pair of the self-similar form Sx = y·(sigma(z) + c),
// Sy = y·(2f(z)² − z·(sigma(z) + c)), which solves the three first-order
// potential equations for any constant c; c shifts only the remaining
// scalar equation.
AuxPotentials case_iv_potentials(const TrajectoryIV& traj, double c_sigma);

// Picks the constant c so the scaled constant-slot residual vanishes at the
// probe point. The residual is affine in c, so two evaluations determine it
// exactly; a degenerate slope (c does not influence the residual at the
// probe) throws.
double fit_sigma_constant(const TrajectoryIV& traj, const ODEParamsIV& params,
                          const Box& window, Point2 probe);

}  // namespace toric
